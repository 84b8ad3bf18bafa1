// DOM builders. Pure functions of the API data: the axiom text they show is
// exactly what the service serialized, never reconstructed client-side.

import type {
  ItemStatus,
  MergeReport,
  SignatureView,
  StageView,
} from "./types.js";

function el<K extends keyof HTMLElementTagNameMap>(
  tag: K,
  className?: string,
  text?: string,
): HTMLElementTagNameMap[K] {
  const node = document.createElement(tag);
  if (className) node.className = className;
  if (text !== undefined) node.textContent = text;
  return node;
}

export function badge(status: ItemStatus): HTMLSpanElement {
  return el("span", `badge ${status}`, status);
}

export function renderTaxonomy(view: SignatureView): HTMLElement {
  const root = el("ul", "tree");
  if (view.classes.length === 0) {
    root.appendChild(el("li", "empty", "no classes yet"));
  }
  for (const cls of view.classes) {
    const item = el("li");
    item.appendChild(el("span", "class-name", cls.name));
    item.appendChild(el("span", "count", ` (${cls.members.length})`));
    if (cls.members.length > 0) {
      const members = el("ul");
      for (const member of cls.members) {
        members.appendChild(el("li", "member", member));
      }
      item.appendChild(members);
    }
    root.appendChild(item);
  }
  const classified = new Set(view.classes.flatMap((c) => c.members));
  const loose = view.individuals.filter((name) => !classified.has(name));
  if (loose.length > 0) {
    const item = el("li");
    item.appendChild(el("span", "class-name", "(no class)"));
    const members = el("ul");
    for (const name of loose) members.appendChild(el("li", "member", name));
    item.appendChild(members);
    root.appendChild(item);
  }
  return root;
}

export function renderProperties(view: SignatureView): HTMLElement {
  const root = el("ul", "tree");
  if (view.object_properties.length === 0) {
    root.appendChild(el("li", "empty", "no object properties yet"));
  }
  for (const prop of view.object_properties) {
    const item = el("li");
    item.appendChild(el("span", "property-name", prop.name));
    item.appendChild(el("span", "count", ` (${prop.assertions.length})`));
    if (prop.assertions.length > 0) {
      const list = el("ul");
      for (const assertion of prop.assertions) {
        list.appendChild(
          el("li", "assertion", `${assertion.subject} → ${assertion.object}`),
        );
      }
      item.appendChild(list);
    }
    root.appendChild(item);
  }
  return root;
}

export interface StageHandlers {
  onAccept(stageId: string, accepted: number[]): void;
  onReject(stageId: string): void;
}

const ACCEPTABLE: ReadonlySet<ItemStatus> = new Set(["new", "duplicate"]);

export function renderStage(stage: StageView, handlers: StageHandlers): HTMLElement {
  const root = el("div", "stage");
  root.dataset.stageId = stage.stage_id;

  const origin = stage.pattern_id ? `${stage.backend} ${stage.pattern_id}` : stage.backend;
  root.appendChild(el("p", "stage-sentence", `“${stage.sentence}” via ${origin}`));

  const table = el("table", "stage");
  const checkboxes = new Map<number, HTMLInputElement>();
  for (const item of stage.items) {
    const row = el("tr");
    const acceptable = ACCEPTABLE.has(item.status);
    if (!acceptable) row.className = "disabled";

    const checkCell = el("td");
    const checkbox = el("input") as HTMLInputElement;
    checkbox.type = "checkbox";
    checkbox.checked = acceptable;
    checkbox.disabled = !acceptable;
    checkbox.dataset.index = String(item.index);
    checkboxes.set(item.index, checkbox);
    checkCell.appendChild(checkbox);
    row.appendChild(checkCell);

    const badgeCell = el("td");
    badgeCell.appendChild(badge(item.status));
    row.appendChild(badgeCell);

    const axiomCell = el("td");
    axiomCell.appendChild(el("div", "axiom", item.axiom));
    if (item.detail) {
      axiomCell.appendChild(el("div", "detail", item.detail));
    }
    row.appendChild(axiomCell);
    table.appendChild(row);
  }
  root.appendChild(table);

  if (stage.rejected_lines.length > 0) {
    const box = el("div", "rejected-lines");
    box.appendChild(el("div", undefined, "rejected by validation:"));
    for (const rejected of stage.rejected_lines) {
      const line = el("div", "line", rejected.line);
      line.title = rejected.reason;
      box.appendChild(line);
      box.appendChild(el("div", "detail", rejected.reason));
    }
    root.appendChild(box);
  }

  const actions = el("div", "stage-actions");
  const accept = el("button", "accept", "Accept checked");
  accept.addEventListener("click", () => {
    const accepted = [...checkboxes.entries()]
      .filter(([, box]) => box.checked)
      .map(([index]) => index)
      .sort((a, b) => a - b);
    handlers.onAccept(stage.stage_id, accepted);
  });
  const reject = el("button", "reject", "Reject all");
  reject.addEventListener("click", () => handlers.onReject(stage.stage_id));
  actions.appendChild(accept);
  actions.appendChild(reject);
  root.appendChild(actions);
  return root;
}

export function renderReport(sentence: string, report: MergeReport): HTMLElement {
  return el(
    "li",
    "report",
    `“${sentence}”: +${report.added} added, ` +
      `${report.skipped_duplicates} duplicates skipped, ${report.rejected} rejected ` +
      `(revision ${report.new_revision})`,
  );
}
