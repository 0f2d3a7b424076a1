/** Wire types mirroring the planner API's JSON payloads. */

export type GreyPair = [number, number];

export interface Assessment {
  ideal_value: number;
  critical_value: number;
  positioned_value: number;
  degree: number;
  target_floor: number;
  pleased: boolean;
}

export interface StepRecord {
  risk_weight: GreyPair | null;
  positioned: Record<string, number>;
  assessment: Assessment;
  allocation: number[];
  risk_level: number | null;
}

export type SessionStatus = "awaiting_lambda" | "pleased" | "abandoned";

export interface SessionDoc {
  session_id: string;
  model: string;
  kind: "portfolio" | "grey_program";
  target_floor: number;
  positioned: Record<string, number>;
  theta_lambda: number;
  risk_weight: GreyPair | null;
  status: SessionStatus;
  history: StepRecord[];
}

export interface FrontierPointDoc {
  epsilon: number;
  profit: number;
  risk: number;
  tradeoff: number | null;
  allocation: number[];
}

export interface FrontierReport {
  mode: string;
  handle: string;
  points: FrontierPointDoc[];
  ideal: { profit: number; risk: number };
  compromise: { epsilon: number; profit: number; risk: number; allocation: number[] };
  csv: string;
}

export interface IngestResponse {
  handle: string;
  kind: string;
}
