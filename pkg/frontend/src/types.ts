// Shapes of the service's JSON responses.

export type BackendChoice = "auto" | "pattern" | "llm";

export type ItemStatus = "new" | "duplicate" | "conflict" | "invalid";

export interface SignatureClass {
  name: string;
  members: string[];
}

export interface PropertyAssertion {
  subject: string;
  object: string;
}

export interface SignatureProperty {
  name: string;
  assertions: PropertyAssertion[];
}

export interface SignatureView {
  revision: number;
  classes: SignatureClass[];
  object_properties: SignatureProperty[];
  individuals: string[];
}

export interface StageItem {
  index: number;
  axiom: string;
  status: ItemStatus;
  detail: string;
}

export interface RejectedLine {
  line: string;
  reason: string;
}

export interface StageView {
  stage_id: string;
  sentence: string;
  base_revision: number;
  backend: string;
  pattern_id: string | null;
  items: StageItem[];
  rejected_lines: RejectedLine[];
}

export interface MergeReport {
  added: number;
  skipped_duplicates: number;
  rejected: number;
  new_revision: number;
}

export interface SessionInfo {
  session_id: string;
  revision: number;
}
