// Wire types mirroring docs/protocol/*.schema.json. The engine is the single
// source of truth: nothing in the client ever computes math from these.

export interface PageInfo {
  image: string;
  width: number;
  height: number;
}

export interface FormulaState {
  id: string;
  latex: string;
  box: [number, number, number, number] | null;
  augmentable: boolean;
}

export interface FrameState {
  x_axis: [number, number, number, number];
  y_axis: [number, number, number, number];
  origin: [number, number];
}

export interface CoordMapState {
  origin: [number, number];
  sx: number;
  sy: number;
  y_down: boolean;
}

export interface PolylineState {
  points: [number, number][];
  closed: boolean;
  clipped: boolean;
}

export interface PlotState {
  plot_id: string;
  formula_id: string;
  polylines: PolylineState[];
}

export interface HighlightState {
  symbol: string;
  kind: "guide_v" | "guide_h" | "segment";
  segment_id?: string;
  points: [number, number][];
}

export interface FigureState {
  id: string;
  box: [number, number, number, number];
  frame: FrameState | null;
  coord_map: CoordMapState | null;
  graph_path_detected: boolean;
  plots: PlotState[];
  highlights: HighlightState[];
}

export interface HintStep {
  latex: string;
  rule: string | null;
  narration: string;
}

export interface ExpansionState {
  rendered: string;
  value: number | null;
  exact: string | null;
  elided: boolean;
}

export interface PanelState {
  id: string;
  kind: "hint" | "example";
  formula_id: string;
  target?: string;
  steps?: HintStep[];
  expansion?: ExpansionState | null;
  error?: string | null;
}

export interface DraggableState {
  formula_id: string;
  span: [number, number];
  anchor: [number, number];
  token: string;
  kind: "literal" | "variable";
  variable_id: string | null;
  value?: number;
  lo?: number;
  hi?: number;
}

export interface VariableState {
  id: string;
  name: string;
  value: number;
  lo: number;
  hi: number;
  origin: "promoted" | "ensured";
}

export interface RenderState {
  revision: number;
  session: string;
  page: PageInfo;
  formulas: FormulaState[];
  figures: FigureState[];
  panels: PanelState[];
  draggables: DraggableState[];
  variables: VariableState[];
}

export type SessionEvent =
  | { op: "bind"; formula: string; figure: string }
  | { op: "promote"; formula: string; span: [number, number] }
  | { op: "set"; var: string; value: number }
  | { op: "drag"; plot: string; point: [number, number]; var: string }
  | { op: "highlight"; symbol: string | null }
  | { op: "hint"; formula: string; target?: string }
  | { op: "example"; formula: string };

export interface EventResponse {
  revision: number;
  state: RenderState;
}

export interface ProtocolError {
  error: { code: string; message: string; pointer?: string };
}

export function pixelToWorld(cm: CoordMapState, px: number, py: number): [number, number] {
  const sign = cm.y_down ? -1 : 1;
  return [(px - cm.origin[0]) / cm.sx, (sign * (py - cm.origin[1])) / cm.sy];
}

export function worldToPixel(cm: CoordMapState, wx: number, wy: number): [number, number] {
  const sign = cm.y_down ? -1 : 1;
  return [cm.origin[0] + cm.sx * wx, cm.origin[1] + sign * cm.sy * wy];
}
