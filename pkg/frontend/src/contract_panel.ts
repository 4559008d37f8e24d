/** Contract editor controller: pushes edited terms to the curve endpoint and
 * exposes display-ready readouts. All margin numbers come from the service
 * response summary, never from local math. */

import type { ApiClient } from "./api.js";
import { ApiError } from "./api.js";
import { pct } from "./format.js";
import type { ContractOutcomeDto, ContractTermsDto, CurveDto } from "./types.js";

export interface ContractReadout {
  maxMargin: string;
  minMargin: string;
  marginAt30: string;
  curve: CurveDto;
}

export class ContractPanel {
  lastReadout: ContractReadout | null = null;
  lastError: string | null = null;

  constructor(
    private readonly api: ApiClient,
    private readonly onUpdate: (readout: ContractReadout) => void = () => {},
    private readonly onError: (message: string) => void = () => {},
  ) {}

  /** Re-evaluate the curve for edited terms against a stakeholder's scope
   * from the current results payload. */
  async applyTerms(
    terms: ContractTermsDto,
    outcome: ContractOutcomeDto,
  ): Promise<ContractReadout | null> {
    this.lastError = null;
    let curve: CurveDto;
    try {
      curve = await this.api.contractCurve({
        terms,
        we_usd: outcome.we_usd,
        scope: {
          or_caused_usd: outcome.or_caused_usd,
          or_received_usd: outcome.or_received_usd,
        },
      });
    } catch (error) {
      this.lastError =
        error instanceof ApiError && error.field !== null
          ? `${error.field}: ${error.message}`
          : String(error instanceof Error ? error.message : error);
      this.onError(this.lastError);
      return null;
    }
    const readout: ContractReadout = {
      maxMargin: pct(curve.summary.max_margin),
      minMargin: pct(curve.summary.min_margin),
      marginAt30: pct(curve.summary.margin_at_30pct),
      curve,
    };
    this.lastReadout = readout;
    this.onUpdate(readout);
    return readout;
  }
}
