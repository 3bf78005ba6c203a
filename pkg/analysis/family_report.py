"""
Approximation-ratio checks for graph families.

Each entry evaluates one family bound on the measured graph: whether its
hypothesis holds, the bound value, the measured ratio and a verdict.
Ratios use alpha in place of the broadcast rate on the lower side, so a
"holds" verdict is a literal rational inequality between computed values.
"""
import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Callable, List, Optional

from analysis.rounding import round_half_integral_vc, round_independent_set, vertex_values
from config.settings import get_settings
from constants import VERDICT_HOLDS, VERDICT_HYPOTHESIS_UNMET, VERDICT_NA, VERDICT_VIOLATED
from graph.oracles import (
    clique_number,
    exact_coloring,
    greedy_coloring,
    independence_number,
    mais,
    maximal_triangle_packing,
    vertex_cover_number,
)
from graph.side_info_graph import SideInfoGraph, induced
from models.rational import RationalValue
from models.report import FamilyEntry, FamilyReport
from solvers.ic_lps import alpha_fk, fcc, fcp, fvc
from utils.exceptions import BudgetExceededException

logger = logging.getLogger(__name__)


@dataclass
class FamilyHints:
    chromatic: Optional[int] = None  # asserted colour count
    is_udg: bool = False
    lam_squared: Optional[Fraction] = None  # squared lambda-precision of unit disk centres
    planar: bool = False
    outerplanar: bool = False


class _Measures:
    """Quantities shared by the entries, computed on first use."""

    def __init__(self, g: SideInfoGraph, oracle_limit: Optional[int]):
        self.g = g
        self.limit = get_settings().oracle_limit if oracle_limit is None else oracle_limit
        self.notes: List[str] = []

    @cached_property
    def alpha(self) -> int:
        return independence_number(self.g, self.limit)

    @cached_property
    def omega(self) -> int:
        return clique_number(self.g, self.limit)

    @cached_property
    def coloring(self):
        if self.g.n <= self.limit:
            return exact_coloring(self.g, self.limit)
        self.notes.append("greedy coloring used above the oracle limit")
        return greedy_coloring(self.g)

    @cached_property
    def chi(self) -> int:
        return max(self.coloring.values()) + 1

    @cached_property
    def fcc(self) -> Fraction:
        return fcc(self.g).value

    @cached_property
    def fcp(self) -> Fraction:
        return fcp(self.g).value

    @cached_property
    def mais(self) -> int:
        return mais(self.g)

    @cached_property
    def vc(self) -> int:
        return vertex_cover_number(self.g, self.limit)

    @cached_property
    def packing(self):
        return maximal_triangle_packing(self.g)

    @property
    def t(self) -> int:
        return len(self.packing)

    @cached_property
    def rest(self) -> Optional[SideInfoGraph]:
        used = {v for triangle in self.packing for v in triangle}
        left = [v for v in range(self.g.n) if v not in used]
        return induced(self.g, left) if left else None

    @cached_property
    def rest_coloring(self):
        if self.rest is None:
            return {}
        if self.rest.n <= self.limit:
            return exact_coloring(self.rest, self.limit)
        return greedy_coloring(self.rest)

    @cached_property
    def l(self) -> int:
        return max(self.rest_coloring.values()) + 1 if self.rest_coloring else 0

    @cached_property
    def k_rest(self) -> int:
        return vertex_cover_number(self.rest, self.limit) if self.rest is not None else 0

    @property
    def ratio(self) -> Fraction:
        return self.fcc / self.alpha


def _verdict(hypothesis_met: bool, bound: Optional[Fraction], measured: Optional[Fraction]) -> str:
    if not hypothesis_met:
        return VERDICT_HYPOTHESIS_UNMET
    if bound is None or measured is None:
        return VERDICT_NA
    return VERDICT_HOLDS if measured <= bound else VERDICT_VIOLATED


def _entry(theorem_id: str, description: str, hypothesis_met: bool, bound: Optional[Fraction] = None,
           measured: Optional[Fraction] = None, note: str = "", verdict: Optional[str] = None) -> FamilyEntry:
    return FamilyEntry(
        theorem_id=theorem_id,
        description=description,
        hypothesis_met=hypothesis_met,
        bound=RationalValue.from_fraction(bound) if bound is not None else None,
        measured=RationalValue.from_fraction(measured) if measured is not None else None,
        verdict=verdict or _verdict(hypothesis_met, bound, measured),
        note=note,
    )


# -------------------
# Entries
# -------------------
def _chromatic_ind(m: _Measures, hints: FamilyHints) -> FamilyEntry:
    desc = "fcc <= (k/2) alpha for k-colorable graphs"
    k = max(2, hints.chromatic if hints.chromatic is not None else m.chi)
    if hints.chromatic is not None and m.g.n <= m.limit and m.chi > hints.chromatic:
        return _entry("chromatic-ind", desc, False, note=f"asserted {hints.chromatic} colors but chi = {m.chi}")
    af2 = alpha_fk(m.g, 2)
    chosen = round_independent_set(m.g, vertex_values(af2.certificate, m.g.n), m.coloring)
    note = f"alpha_F2 = {af2.value} rounds to an independent set of size {len(chosen)} >= {Fraction(2, max(2, m.chi)) * af2.value}"
    return _entry("chromatic-ind", desc, True, Fraction(k, 2), m.ratio, note)


def _capacity_ratio(m: _Measures):
    """(3t + k') / FCP and the bound (3t + k') / (2t + k' l / (2l - 2)), or None when undefined."""
    numerator = 3 * m.t + m.k_rest
    if numerator == 0 or m.fcp == 0:
        return None, None
    measured = Fraction(numerator) / m.fcp
    if m.l >= 2:
        bound = Fraction(numerator) / (2 * m.t + Fraction(m.k_rest * m.l, 2 * m.l - 2))
    else:
        bound = Fraction(3, 2)
    return bound, measured


def _chromatic_cap(m: _Measures, hints: FamilyHints) -> FamilyEntry:
    desc = "(3t + k') / FCP <= (3t + k') / (2t + k' l / (2l - 2))"
    bound, measured = _capacity_ratio(m)
    note = f"t = {m.t}, k' = {m.k_rest}, l = {m.l}"
    if m.rest is not None and m.rest.edge_count:
        frac = vertex_values(fvc(m.rest).certificate, m.rest.n)
        cover = round_half_integral_vc(m.rest, frac, m.rest_coloring)
        note += f"; rounded cover of G' has size {len(cover)}"
    return _entry("chromatic-cap", desc, True, bound, measured, note)


def _sparse_ind(m: _Measures, hints: FamilyHints) -> FamilyEntry:
    desc = "fcc / alpha <= max(e(n-2)/(n(n-1)) + 1, 2e/(3n) + 4/3)"
    n, e = m.g.n, m.g.edge_count
    if n < 2:
        return _entry("sparse-ind", desc, True, note="needs at least two vertices")
    bound = max(Fraction(e * (n - 2), n * (n - 1)) + 1, Fraction(2 * e, 3 * n) + Fraction(4, 3))
    return _entry("sparse-ind", desc, True, bound, m.ratio)


def _udg_chromatic(m: _Measures, hints: FamilyHints) -> FamilyEntry:
    desc = "chi <= 3 omega - 2 for unit disk graphs"
    if not hints.is_udg:
        return _entry("udg-chromatic", desc, False)
    return _entry("udg-chromatic", desc, True, Fraction(3 * m.omega - 2), Fraction(m.chi))


def _udg_ind(m: _Measures, hints: FamilyHints) -> FamilyEntry:
    desc = "fcc / alpha <= 3 for unit disk graphs"
    if not hints.is_udg:
        return _entry("udg-ind", desc, False)
    return _entry("udg-ind", desc, True, Fraction(3), m.ratio)


def _udg_cap(m: _Measures, hints: FamilyHints) -> FamilyEntry:
    desc = "(3t + k') / FCP <= 3/2 for disk graphs"
    if not hints.is_udg:
        return _entry("udg-cap", desc, False)
    _, measured = _capacity_ratio(m)
    return _entry("udg-cap", desc, True, Fraction(3, 2), measured)


def _lambda_clique(m: _Measures, hints: FamilyHints) -> FamilyEntry:
    desc = "omega <= 64 / lambda^2 for lambda-precise disk graphs"
    if hints.lam_squared is None:
        return _entry("lambda-clique", desc, False)
    return _entry("lambda-clique", desc, True, 64 / hints.lam_squared, Fraction(m.omega))


def _lambda_ind(m: _Measures, hints: FamilyHints) -> FamilyEntry:
    desc = "fcc / alpha <= 64 / lambda^2 + 1"
    if hints.lam_squared is None:
        return _entry("lambda-ind", desc, False)
    return _entry("lambda-ind", desc, True, 64 / hints.lam_squared + 1, m.ratio)


def _clique_ind(m: _Measures, hints: FamilyHints) -> FamilyEntry:
    desc = "fcc <= (omega + 1) alpha for disk graphs"
    if not (hints.is_udg or hints.lam_squared is not None):
        return _entry("clique-ind", desc, False)
    return _entry("clique-ind", desc, True, Fraction(m.omega + 1), m.ratio)


def _packing_chromatic_ind(m: _Measures, hints: FamilyHints) -> FamilyEntry:
    desc = "fcc / alpha <= j(l-2)/(2l-2) - j(l-4)/(2l-2) t/n + l/(2l-2)"
    j, l, t, n = m.chi, m.l, m.t, m.g.n
    if l < 2:
        return _entry("packing-chromatic-ind", desc, False, note=f"chi(G') = {l}")
    d = 2 * l - 2
    bound = Fraction(j * (l - 2), d) - Fraction(j * (l - 4) * t, d * n) + Fraction(l, d)
    return _entry("packing-chromatic-ind", desc, True, bound, m.ratio, f"j = {j}, l = {l}, t = {t}")


def _packing_ind(m: _Measures, hints: FamilyHints) -> FamilyEntry:
    desc = "fcc / alpha <= (l^2 n - 2ln - l^2 t + 4lt) / ((2l-2)(n-3t)) + l/(2l-2)"
    l, t, n = m.l, m.t, m.g.n
    if l < 2 or n <= 3 * t:
        return _entry("packing-ind", desc, False, note=f"l = {l}, n - 3t = {n - 3 * t}")
    d = 2 * l - 2
    bound = Fraction(l * l * n - 2 * l * n - l * l * t + 4 * l * t, d * (n - 3 * t)) + Fraction(l, d)
    return _entry("packing-ind", desc, True, bound, m.ratio, f"l = {l}, t = {t}")


def _packing_sparse_ind(m: _Measures, hints: FamilyHints) -> FamilyEntry:
    desc = "fcc / alpha <= (l-2)/(2l-2) 2e/n + 1 when chi(G') > 3"
    l, e, n = m.l, m.g.edge_count, m.g.n
    if l <= 3:
        return _entry("packing-sparse-ind", desc, False, note=f"chi(G') = {l}")
    bound = Fraction(l - 2, 2 * l - 2) * Fraction(2 * e, n) + 1
    return _entry("packing-sparse-ind", desc, True, bound, m.ratio)


def _degree_ind(m: _Measures, hints: FamilyHints) -> FamilyEntry:
    desc = "fcc / alpha <= (max degree + 1) / 2"
    delta = m.g.max_degree
    if delta < 1:
        return _entry("degree-ind", desc, False, note="graph has no edges")
    return _entry("degree-ind", desc, True, Fraction(delta + 1, 2), m.ratio)


def _planar_ind(m: _Measures, hints: FamilyHints) -> FamilyEntry:
    return _entry("planar-ind", "fcc <= 2 alpha for planar graphs (asserted)", hints.planar, Fraction(2),
                  m.ratio if hints.planar else None)


def _outerplanar_ind(m: _Measures, hints: FamilyHints) -> FamilyEntry:
    return _entry("outerplanar-ind", "fcc <= (3/2) alpha for outerplanar graphs (asserted)", hints.outerplanar,
                  Fraction(3, 2), m.ratio if hints.outerplanar else None)


def _capacity_sandwich(m: _Measures, hints: FamilyHints) -> FamilyEntry:
    desc = "n - fcc <= n - MAIS <= VC"
    n = m.g.n
    lower, middle, upper = n - m.fcc, Fraction(n - m.mais), Fraction(m.vc)
    verdict = VERDICT_HOLDS if lower <= middle <= upper else VERDICT_VIOLATED
    return _entry("capacity-sandwich", desc, True, middle, lower, f"VC = {m.vc}", verdict=verdict)


ENTRIES: List[Callable[[_Measures, FamilyHints], FamilyEntry]] = [
    _chromatic_ind,
    _chromatic_cap,
    _sparse_ind,
    _udg_chromatic,
    _udg_ind,
    _udg_cap,
    _lambda_clique,
    _lambda_ind,
    _clique_ind,
    _packing_chromatic_ind,
    _packing_ind,
    _packing_sparse_ind,
    _degree_ind,
    _planar_ind,
    _outerplanar_ind,
    _capacity_sandwich,
]


def _entry_id(fn: Callable) -> str:
    return fn.__name__.lstrip("_").replace("_", "-")


def family_report(g: SideInfoGraph, hints: Optional[FamilyHints] = None,
                  oracle_limit: Optional[int] = None) -> FamilyReport:
    """
    Evaluate every family entry on an undirected graph.

    Args:
        g: Graph; directed graphs get n/a entries
        hints: Asserted family memberships and parameters
        oracle_limit: Vertex limit of the exact oracles

    Returns:
        FamilyReport with one entry per family bound and the measured quantities
    """
    hints = hints or FamilyHints()
    report = FamilyReport()
    if not g.is_undirected:
        report.entries = [_entry(_entry_id(fn), "", False, note="directed graph", verdict=VERDICT_NA) for fn in ENTRIES]
        return report

    m = _Measures(g, oracle_limit)
    for fn in ENTRIES:
        try:
            entry = fn(m, hints)
        except BudgetExceededException as e:
            entry = _entry(_entry_id(fn), "", True, note=e.message, verdict=VERDICT_NA)
        if m.notes and "greedy" not in entry.note:
            entry.note = "; ".join(filter(None, [entry.note] + m.notes))
        report.entries.append(entry)
        if entry.verdict == VERDICT_VIOLATED:
            logger.warning(f"family bound {entry.theorem_id} measured {entry.measured.value} above {entry.bound.value}")

    for name in ("alpha", "omega", "chi", "fcc", "fcp", "t", "l", "k_rest"):
        try:
            report.quantities[name] = RationalValue.from_fraction(getattr(m, name))
        except BudgetExceededException:
            continue
    return report
