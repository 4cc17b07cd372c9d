import pytest

from livemath.document import ingest_page
from livemath.fixtures import build_walkthrough_bundle


@pytest.fixture(scope="session")
def walkthrough_bundle(tmp_path_factory):
    return build_walkthrough_bundle(tmp_path_factory.mktemp("walkthrough"))


@pytest.fixture(scope="session")
def walkthrough_page(walkthrough_bundle):
    return ingest_page(walkthrough_bundle)


# the event script the acceptance criterion runs: bind the quadratic, promote
# its 3 and 1 (-> a, b), then shift the vertex to (-5, 4)
WALKTHROUGH_SCRIPT = [
    {"op": "bind", "formula": "f1", "figure": "g0"},
    {"op": "promote", "formula": "f1", "span": [9, 10]},
    {"op": "promote", "formula": "f1", "span": [18, 19]},
    {"op": "set", "var": "a", "value": 5},
    {"op": "set", "var": "b", "value": 4},
]


@pytest.fixture()
def walkthrough_script():
    return [dict(e) for e in WALKTHROUGH_SCRIPT]
