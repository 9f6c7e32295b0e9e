"""Cross-module consistency checks, runnable fast (< a minute) or slow.

Every check compares two independent routes to the same quantity: hardcoded
table vs brute force, closed-form counts vs exhaustive enumeration, claimed
certainty thresholds vs the formulas, and ordering facts vs the full table.
Reports carry no timing or other nondeterminism, so two runs of the same
mode produce identical output.
"""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass

from . import oracle, straights
from .counting import CATEGORIES, count_category, total_hands
from .table import build_table, find_crossover

FAST_ENUMERATION_SIZES = (5, 6)
SLOW_ENUMERATION_SIZES = (5, 6, 7)


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    expected: str
    actual: str


@dataclass(frozen=True)
class VerificationReport:
    mode: str
    checks: tuple[CheckResult, ...]

    @property
    def passed(self) -> bool:
        return all(check.passed for check in self.checks)

    def failures(self) -> tuple[CheckResult, ...]:
        return tuple(check for check in self.checks if not check.passed)

    def to_json(self) -> str:
        payload = {
            "mode": self.mode,
            "passed": self.passed,
            "checks": [asdict(check) for check in self.checks],
        }
        return json.dumps(payload, indent=2) + "\n"

    def summary_lines(self) -> list[str]:
        lines = []
        for check in self.checks:
            status = "PASS" if check.passed else "FAIL"
            line = f"{status}  {check.name}"
            if not check.passed:
                line += f"  expected={check.expected} actual={check.actual}"
            lines.append(line)
        overall = "PASS" if self.passed else "FAIL"
        lines.append(f"{overall}  overall ({len(self.checks)} checks)")
        return lines


def _check(name: str, expected, actual) -> CheckResult:
    return CheckResult(name, expected == actual, str(expected), str(actual))


def run_verification(
    mode: str = "fast",
    *,
    rank_set_table: tuple[int, ...] | None = None,
    workers: int = 1,
) -> VerificationReport:
    """Run every consistency check; mode 'slow' adds n=7 exhaustive
    enumeration (about 1.3e8 hands).

    rank_set_table overrides the straight rank-set table under test (used to
    prove the check actually fires on a corrupted table).
    """
    if mode not in ("fast", "slow"):
        raise ValueError(f"mode must be 'fast' or 'slow', got {mode!r}")
    checks: list[CheckResult] = []

    table = straights.STRAIGHT_RANK_SET_COUNTS if rank_set_table is None else rank_set_table
    reference = tuple(
        straights.straight_rank_sets_bruteforce(k) for k in range(straights.RANK_COUNT + 1)
    )
    checks.append(_check("straight-rank-table-vs-bruteforce", reference, tuple(table)))

    sizes = SLOW_ENUMERATION_SIZES if mode == "slow" else FAST_ENUMERATION_SIZES
    for n in sizes:
        counted = oracle.exhaustive_counts(n, workers=workers)
        checks.append(_check(f"enumeration-total-n{n}", total_hands(n), counted["total"]))
        for category in CATEGORIES:
            checks.append(
                _check(
                    f"formula-vs-enumeration-{category}-n{n}",
                    count_category(n, category),
                    counted[category],
                )
            )

    rows = {row.n: row for row in build_table(5, 52)}
    for category, threshold in (("flush", 17), ("full_house", 27), ("straight", 45)):
        certain = [n for n in range(5, 53) if rows[n].count(category) == rows[n].total]
        checks.append(
            _check(f"certainty-threshold-{category}", list(range(threshold, 53)), certain)
        )
    checks.append(
        _check("straight-n44-one-short", rows[44].total - 1, rows[44].straight)
    )

    dominance_ok = all(rows[n].flush >= rows[n].full_house for n in range(5, 53))
    checks.append(_check("flush-dominates-full-house-5-52", True, dominance_ok))

    for category in CATEGORIES:
        probs = [rows[n].probability(category) for n in range(5, 53)]
        monotone = all(a <= b for a, b in zip(probs, probs[1:]))
        checks.append(_check(f"probability-monotone-{category}", True, monotone))

    checks.append(
        _check("crossover-flush-straight", 12, find_crossover("flush", "straight").first_n)
    )
    checks.append(
        _check(
            "crossover-full-house-straight",
            20,
            find_crossover("full_house", "straight").first_n,
        )
    )
    checks.append(
        _check("crossover-full-house-flush", None, find_crossover("full_house", "flush").first_n)
    )

    return VerificationReport(mode=mode, checks=tuple(checks))
