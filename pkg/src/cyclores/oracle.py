"""Ground truth by direct exponentiation mod p, and the differential driver."""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .modp import InvalidInput, PrimeContext, build_context


def ind_class_oracle(ctx: PrimeContext, D: int) -> int:
    """Ind_gamma(D) mod l, via D^((p-1)/l) = alpha^j (mod p)."""
    p = ctx.p
    if D % p == 0:
        raise InvalidInput(f"D={D} must be coprime to p={p}")
    return ctx.root_exponent(pow(D, (p - 1) // ctx.l, p))


@dataclass
class DifferentialReport:
    contexts: int = 0
    passed: int = 0
    failed: int = 0
    first_failure: tuple | None = None
    records: list = field(default_factory=list, repr=False)

    def _record(self, ok: bool, what: tuple) -> None:
        if ok:
            self.passed += 1
        else:
            self.failed += 1
            if self.first_failure is None:
                self.first_failure = what

    @property
    def ok(self) -> bool:
        return self.failed == 0


def differential_run(grid, D_range, seed: int = 0, keep_records: bool = False) -> DifferentialReport:
    """Compare classify against the oracle on every (l, p) in grid and D in D_range.

    Also checks the criteria for D = l and D = 2.  Failures are counted, not raised.
    """
    from .criterion import classify, criterion_for_2, criterion_for_l

    report = DifferentialReport()
    for l, p in grid:
        ctx = build_context(l, p)
        report.contexts += 1
        for D in D_range:
            if math.gcd(D, l * p) != 1:
                continue
            c = classify(ctx, D, seed)
            truth = ind_class_oracle(ctx, D)
            report._record(c.ind_class == truth, ("classify", l, p, D, c.ind_class, truth))
            if keep_records:
                report.records.append((ctx, c, truth))
        for name, crit in (("criterion_l", criterion_for_l), ("criterion_2", criterion_for_2)):
            r = crit(ctx)
            report._record(r.agrees, (name, l, p, r))
    return report
