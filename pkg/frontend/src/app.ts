import { ApiClient, ApiError } from "./api.js";
import type { BackendChoice, StageView } from "./types.js";
import { renderProperties, renderReport, renderStage, renderTaxonomy } from "./view.js";

/** The supervised loop: submit, review badges, decide, watch panels update.
 *
 * State changes always round-trip: after every decision the signature and
 * ontology text are re-fetched rather than patched locally.
 */
export class App {
  sessionId = "";

  private input!: HTMLInputElement;
  private backendSelect!: HTMLSelectElement;
  private submitButton!: HTMLButtonElement;
  private errorBanner!: HTMLElement;
  private taxonomyPanel!: HTMLElement;
  private propertiesPanel!: HTMLElement;
  private stagePanel!: HTMLElement;
  private historyList!: HTMLElement;
  private ontologyPre!: HTMLElement;

  constructor(
    private readonly api: ApiClient,
    private readonly root: HTMLElement,
  ) {}

  async init(): Promise<void> {
    this.buildSkeleton();
    const session = await this.api.createSession();
    this.sessionId = session.session_id;
    await this.refresh();
  }

  private buildSkeleton(): void {
    this.root.innerHTML = `
      <header class="toolbar">
        <h1>ontoforge</h1>
        <input id="sentence-input" type="text"
               placeholder="e.g. Anna is a girl" autocomplete="off">
        <select id="backend-select">
          <option value="auto">auto</option>
          <option value="pattern">pattern</option>
          <option value="llm">llm</option>
        </select>
        <button id="submit-btn" disabled>Translate</button>
      </header>
      <div id="error-banner" role="alert"></div>
      <main class="panels">
        <section class="panel" id="taxonomy-panel-section">
          <h2>Taxonomy</h2>
          <div id="taxonomy-panel"></div>
        </section>
        <section class="panel" id="properties-panel-section">
          <h2>Object properties</h2>
          <div id="properties-panel"></div>
        </section>
        <section class="panel" id="stage-panel-section">
          <h2>Pending translation</h2>
          <div id="stage-panel"></div>
          <h2>History</h2>
          <ul id="history-panel"></ul>
        </section>
      </main>
      <pre id="ontology-text"></pre>
    `;
    this.input = this.root.querySelector("#sentence-input") as HTMLInputElement;
    this.backendSelect = this.root.querySelector("#backend-select") as HTMLSelectElement;
    this.submitButton = this.root.querySelector("#submit-btn") as HTMLButtonElement;
    this.errorBanner = this.root.querySelector("#error-banner") as HTMLElement;
    this.taxonomyPanel = this.root.querySelector("#taxonomy-panel") as HTMLElement;
    this.propertiesPanel = this.root.querySelector("#properties-panel") as HTMLElement;
    this.stagePanel = this.root.querySelector("#stage-panel") as HTMLElement;
    this.historyList = this.root.querySelector("#history-panel") as HTMLElement;
    this.ontologyPre = this.root.querySelector("#ontology-text") as HTMLElement;

    this.input.addEventListener("input", () => {
      this.submitButton.disabled = this.input.value.trim() === "";
    });
    this.submitButton.addEventListener("click", () => {
      void this.submitSentence();
    });
    this.input.addEventListener("keydown", (event) => {
      if ((event as KeyboardEvent).key === "Enter" && !this.submitButton.disabled) {
        void this.submitSentence();
      }
    });
  }

  async refresh(): Promise<void> {
    const [signature, text] = await Promise.all([
      this.api.signature(this.sessionId),
      this.api.ontologyText(this.sessionId),
    ]);
    this.taxonomyPanel.replaceChildren(renderTaxonomy(signature));
    this.propertiesPanel.replaceChildren(renderProperties(signature));
    this.ontologyPre.textContent = text;
  }

  async submitSentence(): Promise<StageView | null> {
    const sentence = this.input.value.trim();
    if (!sentence) {
      return null; // submit stays disabled for empty input; never call the API
    }
    this.clearError();
    try {
      const stage = await this.api.translate(
        this.sessionId,
        sentence,
        this.backendSelect.value as BackendChoice,
      );
      this.showStage(stage);
      return stage;
    } catch (error) {
      this.showError(error);
      return null;
    }
  }

  private showStage(stage: StageView): void {
    const panel = renderStage(stage, {
      onAccept: (stageId, accepted) => void this.decideStage(stageId, accepted),
      onReject: (stageId) => void this.decideStage(stageId, []),
    });
    this.stagePanel.replaceChildren(panel);
  }

  async decideStage(stageId: string, accepted: number[]): Promise<void> {
    this.clearError();
    try {
      const report = await this.api.decide(this.sessionId, stageId, accepted);
      this.historyList.appendChild(renderReport(this.currentStageSentence(), report));
      this.stagePanel.replaceChildren();
      await this.refresh();
    } catch (error) {
      if (error instanceof ApiError && error.code === "STALE_STAGE") {
        this.stagePanel.replaceChildren();
      }
      this.showError(error);
    }
  }

  private currentStageSentence(): string {
    const sentence = this.stagePanel.querySelector(".stage-sentence");
    const text = sentence?.textContent ?? "";
    const match = text.match(/“(.*)”/);
    return match ? match[1] : text;
  }

  showError(error: unknown): void {
    const message =
      error instanceof ApiError
        ? `${error.code}: ${error.message}${error.code === "STALE_STAGE" ? " — please re-translate" : ""}`
        : String(error);
    this.errorBanner.textContent = message;
    this.errorBanner.classList.add("visible");
  }

  clearError(): void {
    this.errorBanner.textContent = "";
    this.errorBanner.classList.remove("visible");
  }
}
