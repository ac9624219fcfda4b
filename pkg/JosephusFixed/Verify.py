"""
Property suites that reproduce the published tables and worked examples.

Every suite returns a list of CheckResult; a suite passes when every result does.
"""
from dataclasses import dataclass, field
from typing import Callable, Dict, List

from . import Golden
from .Congruence import (bezout_table_formula, crt_solve, extended_gcd_pow, same_lattice_class,
                         verify_link, verify_links)
from .Errors import UsageError
from .FixedPoints import (check_congruence_conditions, check_eq2_identity, check_eq7_identity,
                          generate_j2_sequence, generate_sequence)
from .FracBase import append_suffix
from .Josephus import is_fixed_point
from .Logger import Logger

DEFAULT_ELL_MAX = 200
TABLE1_P_MAX = 64


@dataclass
class CheckResult:
    """
    Tally of one group of checks.

    Attributes:
    - suite (str): Suite name.
    - check (str): Group name inside the suite.
    - passed (int): Number of passing cases.
    - total (int): Number of cases actually checked.
    - skipped (int): Cases that do not apply.
    - failures (List[str]): Description of each failing case.
    """
    suite: str
    check: str
    passed: int = 0
    total: int = 0
    skipped: int = 0
    failures: List[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.passed == self.total

    def record(self, condition: bool, description: str):
        self.total += 1
        if condition:
            self.passed += 1
        else:
            self.failures.append(description)

    def as_row(self) -> Dict[str, object]:
        return {
            "suite": self.suite,
            "check": self.check,
            "passed": self.passed,
            "total": self.total,
            "skipped": self.skipped,
            "pass": self.ok,
        }


def tables_suite(ell_max: int = DEFAULT_ELL_MAX) -> List[CheckResult]:
    """
    Compare generated fixed points of J_3 and J_2 against the transcribed tables.
    ell_max is unused; the tables have a fixed size.
    """
    table2 = CheckResult("tables", "table2")
    for (ell, n, m, expansion), record in zip(Golden.TABLE2, generate_sequence(len(Golden.TABLE2))):
        generated = (record.ell, record.n, record.m_bar, str(record.expansion))
        table2.record(generated == (ell, n, m, expansion), f"row {ell}: expected {(ell, n, m, expansion)}, got {generated}")

    table3 = CheckResult("tables", "table3")
    for (ell, n, binary), record in zip(Golden.TABLE3, generate_j2_sequence(len(Golden.TABLE3))):
        matches = record.n == n and str(record.expansion) == binary
        table3.record(matches and is_fixed_point(n, 2), f"row {ell}: {n} is not a fixed point of J_2 with expansion {binary}")
    return [table2, table3]


def theorem_suite(ell_max: int = DEFAULT_ELL_MAX) -> List[CheckResult]:
    """
    Digit-append rule, digit-count growth and the algebraic identities for
    every consecutive pair among the first ell_max fixed points.

    Raises:
    - UsageError: If ell_max < 2, where there is no pair to check.
    """
    if ell_max < 2:
        raise UsageError(f"the theorem suite needs ell_max >= 2, got {ell_max}")
    records = generate_sequence(ell_max)
    suffix = CheckResult("theorem", "suffix")
    length = CheckResult("theorem", "digit-count")
    identities = CheckResult("theorem", "identities")
    for current, following in zip(records, records[1:]):
        predicted = append_suffix(current.expansion, current.m_bar)
        suffix.record(predicted == following.expansion, f"l={current.ell}: append rule gives {predicted}")
        length.record(len(following.expansion) == len(current.expansion) + current.m_bar + 1,
                      f"l={current.ell}: digit count {len(current.expansion)} -> {len(following.expansion)}")
        identities.record(check_eq2_identity(current.n, following.n)
                          and check_eq7_identity(current.n, following.n)
                          and check_congruence_conditions(current.n, following.n)
                          and following.n > current.n,
                          f"l={current.ell}: identities fail for ({current.n}, {following.n})")
    return [suffix, length, identities]


def crt_suite(ell_max: int = DEFAULT_ELL_MAX) -> List[CheckResult]:
    """
    Worked examples, the Bezout table for p = 1..64 and q = 1..5, and the
    congruence links of the fixed points l = 1..ell_max.
    """
    worked = CheckResult("crt", "worked-examples")
    records = generate_sequence(max(ell_max, 18) + 2)
    for example in Golden.WORKED_LINKS:
        link = crt_solve(example["p"], example["q"])
        report = verify_link(example["ell"], records)
        observed = {"ell": report.ell, "n": report.n, "p": link.p, "q": link.q, "a1": link.a1, "a2": link.a2,
                    "x": link.bezout.x, "y": link.bezout.y, "raw_z": link.raw_z, "z": link.z,
                    "modulus": link.modulus, "quotient": report.quotient}
        worked.record(observed == example and report.passed, f"l={example['ell']}: got {observed}")

    table1 = CheckResult("crt", "table1")
    for q in range(1, 6):
        for p in range(1, TABLE1_P_MAX + 1):
            tabulated = bezout_table_formula(p, q)
            table1.record(same_lattice_class(tabulated, extended_gcd_pow(p, q)),
                          f"p={p}, q={q}: tabulated pair ({tabulated.x}, {tabulated.y}) off the solution lattice")

    links = CheckResult("crt", "links")
    for report in verify_links(records, ell_max):
        if not report.applicable:
            links.skipped += 1
            continue
        links.record(report.passed, f"l={report.ell}: {report.checks}")
    return [worked, table1, links]


SUITES: Dict[str, Callable[[int], List[CheckResult]]] = {
    "tables": tables_suite,
    "theorem": theorem_suite,
    "crt": crt_suite,
}


def run(suite: str, ell_max: int = DEFAULT_ELL_MAX) -> List[CheckResult]:
    """
    Run one suite, or all of them in a fixed order for suite = "all".

    Args:
    - suite (str): "tables", "theorem", "crt" or "all".
    - ell_max (int, optional): Largest index for the theorem and crt suites (default 200).

    Returns:
    - List[CheckResult]: Results in a deterministic order.
    """
    names = list(SUITES) if suite == "all" else [suite]
    results = []
    for name in names:
        Logger.debug(f"running suite {name} up to l={ell_max}")
        results.extend(SUITES[name](ell_max))
    for result in results:
        for failure in result.failures:
            Logger.error(failure, f"{result.suite}/{result.check}")
    return results
