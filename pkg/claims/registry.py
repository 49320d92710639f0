"""
Claim Registry Module

Every correspondence result about vacuous-reduct semantics, encoded as a
per-framework check. A check returns None when the claim holds on the
framework and a Mismatch describing both evaluated sides otherwise.
"""

from dataclasses import dataclass, field
from enum import Enum
from itertools import combinations
from typing import Callable, Dict, List, Optional, Sequence, Tuple, Union

from core.argument_sets import ExtensionSet, canonical, is_strict_subset, is_subset
from core.framework import ArgumentationFramework, project
from semantics.classical import Semantics, co_ub_direct, credulous_union, extensions, stb_cog_direct
from semantics.vacuous import vac_extensions


class ClaimKind(str, Enum):
    EQUALITY = "equality"
    SUBSET = "subset"
    NONEMPTY = "nonempty"
    IFF = "iff"
    ORACLE_MATCH = "oracle-match"
    CUSTOM = "custom"


FORWARD = "forward"
BACKWARD = "backward"


@dataclass(frozen=True)
class Mismatch:
    """Why a claim failed on one framework."""

    detail: str
    left: Optional[ExtensionSet] = None
    right: Optional[ExtensionSet] = None
    direction: Optional[str] = None


Check = Callable[[ArgumentationFramework], Optional[Mismatch]]
Side = Callable[[ArgumentationFramework], ExtensionSet]
Condition = Callable[[ArgumentationFramework], bool]


@dataclass(frozen=True)
class Claim:
    id: str
    kind: ClaimKind
    statement: str
    area: str
    check: Check = field(compare=False, repr=False)

    def evaluate(self, af: ArgumentationFramework) -> Optional[Mismatch]:
        return self.check(af)


# -- side builders --------------------------------------------------------------

def _sem(token: str) -> Side:
    return lambda af: vac_extensions(af, token)


def _side(value: Union[str, Side]) -> Tuple[Side, str]:
    if isinstance(value, str):
        return _sem(value), value
    return value, getattr(value, "__name__", "oracle")


def _equal(left: Union[str, Side], right: Union[str, Side]) -> Check:
    left_fn, left_name = _side(left)
    right_fn, right_name = _side(right)

    def check(af):
        a, b = left_fn(af), right_fn(af)
        if a != b:
            return Mismatch(f"{left_name} differs from {right_name}", a, b)
        return None

    return check


def _subset(left: Union[str, Side], right: Union[str, Side]) -> Check:
    left_fn, left_name = _side(left)
    right_fn, right_name = _side(right)

    def check(af):
        a, b = left_fn(af), right_fn(af)
        if not set(a) <= set(b):
            return Mismatch(f"{left_name} is not contained in {right_name}", a, b)
        return None

    return check


def _nonempty(value: Union[str, Side]) -> Check:
    fn, name = _side(value)

    def check(af):
        found = fn(af)
        if not found:
            return Mismatch(f"{name} has no extensions", found)
        return None

    return check


def _iff(left: Condition, left_name: str, right: Condition, right_name: str) -> Check:
    def check(af):
        a, b = left(af), right(af)
        if a and not b:
            return Mismatch(f"{left_name} holds but {right_name} does not", direction=FORWARD)
        if b and not a:
            return Mismatch(f"{right_name} holds but {left_name} does not", direction=BACKWARD)
        return None

    return check


def _implies(premise: Condition, conclusion: Check) -> Check:
    def check(af):
        if premise(af):
            return conclusion(af)
        return None

    return check


def _all(*checks: Check) -> Check:
    def check(af):
        for item in checks:
            mismatch = item(af)
            if mismatch is not None:
                return mismatch
        return None

    return check


def _same(left: str, right: Union[str, Side]) -> Condition:
    left_fn, _ = _side(left)
    right_fn, _ = _side(right)
    return lambda af: left_fn(af) == right_fn(af)


# -- correspondence grid ----------------------------------------------------------

ROWS: Tuple[str, ...] = ("adm", "co", "pr", "gr", "id", "stb", "sst", "cf", "na")
COLUMNS: Tuple[str, ...] = ("adm", "gr", "id", "stb", "sst", "cf")

GRID: Dict[str, Tuple[str, ...]] = {
    "adm": ("pr", "co", "adm-s1", "adm-s2", "pr", "adm-s3"),
    "co": ("pr", "co", "adm-s1", "co-s1", "pr", "adm-s3"),
    "pr": ("pr", "pr", "pr", "pr", "pr", "adm-s3"),
    "gr": ("gr-s1", "gr", "gr-s2", "gr-s3", "gr-s1", "gr-s4"),
    "id": ("id-s1", "id", "id", "id-s2", "id-s1", "id-s3"),
    "stb": ("stb",) * 6,
    "sst": ("sst", "sst", "sst", "sst", "sst", "sst-s1"),
    "cf": ("ud", "co-ub", "cf-s1", "cf-s2", "ud", "stb-cog"),
    "na": ("na-s1", "na-s2", "na-s3", "na-s4", "na-s1", "stb-cog"),
}


def grid_cell(row: str, column: str) -> str:
    return GRID[row][COLUMNS.index(column)]


def _grid_claims() -> List[Claim]:
    claims = []
    for row in ROWS:
        for column in COLUMNS:
            cell = grid_cell(row, column)
            claims.append(Claim(
                id=f"T1:{row}:{column}",
                kind=ClaimKind.EQUALITY,
                statement=f"vac({row},{column}) = {cell}",
                area=f"grid row {row}",
                check=_equal(f"vac:{row}:{column}", cell),
            ))
    return claims


# -- custom checks ------------------------------------------------------------------

def _column_equalities(af: ArgumentationFramework) -> Optional[Mismatch]:
    for row in ROWS:
        for left, right in (("cf", "na"), ("adm", "co"), ("adm", "pr")):
            mismatch = _equal(f"vac:{row}:{left}", f"vac:{row}:{right}")(af)
            if mismatch is not None:
                return mismatch
    return None


def _sst_column(af: ArgumentationFramework) -> Optional[Mismatch]:
    for row in ROWS:
        mismatch = _equal(f"vac:{row}:sst", f"vac:{row}:adm")(af)
        if mismatch is not None:
            return mismatch
    return None


def _ideal_below_adm_s1(af: ArgumentationFramework) -> Optional[Mismatch]:
    ideal = extensions(af, Semantics.ID)[0]
    found = vac_extensions(af, "adm-s1")
    if ideal not in found:
        return Mismatch("the ideal extension is not an adm-s1 extension", found, (ideal,))
    if not all(is_subset(ideal, e) for e in found):
        return Mismatch("an adm-s1 extension misses part of the ideal extension", found, (ideal,))
    return None


def _no_stable_strict_superset(af: ArgumentationFramework, base: Semantics) -> ExtensionSet:
    stable = extensions(af, Semantics.STB)
    kept = [e for e in extensions(af, base) if not any(is_strict_subset(e, s) for s in stable)]
    return canonical(list(stable) + kept)


def stable_characterization(af: ArgumentationFramework) -> ExtensionSet:
    """stb(F) together with the admissible sets below no stable extension."""
    return _no_stable_strict_superset(af, Semantics.ADM)


def complete_stable_characterization(af: ArgumentationFramework) -> ExtensionSet:
    """stb(F) together with the complete extensions below no stable extension."""
    return _no_stable_strict_superset(af, Semantics.CO)


def _has_stable(af: ArgumentationFramework) -> bool:
    return bool(extensions(af, Semantics.STB))


def _grounded(af: ArgumentationFramework) -> int:
    return extensions(af, Semantics.GR)[0]


def _no_stable_above_grounded(af: ArgumentationFramework) -> bool:
    g = _grounded(af)
    return not any(is_strict_subset(g, s) for s in extensions(af, Semantics.STB))


def _no_stable_above_ideal(af: ArgumentationFramework) -> bool:
    ideal = extensions(af, Semantics.ID)[0]
    return not any(is_strict_subset(ideal, s) for s in extensions(af, Semantics.STB))


def _single_preferred(af: ArgumentationFramework) -> bool:
    return len(extensions(af, Semantics.PR)) == 1


def _single_preferred_in_adm_s3(af: ArgumentationFramework) -> bool:
    preferred = extensions(af, Semantics.PR)
    return len(preferred) == 1 and preferred[0] in vac_extensions(af, "adm-s3")


def _reduct_arguments(af: ArgumentationFramework, subset: int) -> int:
    return af.all_arguments & ~(subset | af.attacked_by(subset))


def _is_restriction_of(af: ArgumentationFramework, inner: int, outer: int) -> bool:
    """The framework induced by ``inner`` is a restriction of the one induced by ``outer``."""
    if not is_subset(inner, outer):
        return False
    outer_af, index_map = af.restrict(outer)
    nested, _ = outer_af.restrict(project(inner, index_map))
    direct, _ = af.restrict(inner)
    return nested.structure() == direct.structure()


def _sst_levels(af: ArgumentationFramework) -> Optional[Mismatch]:
    upper = vac_extensions(af, "sst-s1")
    for e in vac_extensions(af, "adm-s3"):
        kept = _reduct_arguments(af, e)
        if not any(_is_restriction_of(af, _reduct_arguments(af, e2), kept) for e2 in upper):
            return Mismatch(
                f"no sst-s1 extension has a reduct inside the reduct of {{{','.join(af.names_of(e))}}}",
                vac_extensions(af, "adm-s3"), upper,
            )
    return None


def _sst_empty_equivalence(af: ArgumentationFramework) -> Optional[Mismatch]:
    for column in ("cf", "na"):
        top = vac_extensions(af, f"vac:sst:{column}")
        bottom = vac_extensions(af, f"vac:adm:{column}")
        if bool(top) != bool(bottom):
            direction = FORWARD if not top else BACKWARD
            return Mismatch(f"emptiness of vac(sst,{column}) and vac(adm,{column}) disagree", top, bottom, direction)
    return None


def _credulous_equivalence(af: ArgumentationFramework) -> Optional[Mismatch]:
    for base in Semantics:
        reducts = [af.reduct(e)[0] for e in extensions(af, base)]
        for tau, other in combinations(Semantics, 2):
            if all(credulous_union(r, tau) == credulous_union(r, other) for r in reducts):
                left = vac_extensions(af, f"vac:{base.value}:{tau.value}")
                right = vac_extensions(af, f"vac:{base.value}:{other.value}")
                if left != right:
                    return Mismatch(
                        f"credulous unions of {tau} and {other} agree on every {base} reduct, "
                        f"yet vac({base},{tau}) differs from vac({base},{other})",
                        left, right,
                    )
    return None


REINSTATEMENT_VACUITIES: Tuple[str, ...] = ("cf", "na", "adm", "co", "pr", "gr", "id", "sst")


def _reinstatement_sufficiency(af: ArgumentationFramework) -> Optional[Mismatch]:
    for base in ("cf", "na"):
        for tau in REINSTATEMENT_VACUITIES:
            found = vac_extensions(af, f"vac:{base}:{tau}")
            for e in found:
                missing = af.defended_set(e) & ~e
                if missing:
                    return Mismatch(
                        f"vac({base},{tau}) extension {{{','.join(af.names_of(e))}}} "
                        f"defends {{{','.join(af.names_of(missing))}}} without containing it",
                        found,
                    )
    return None


EXISTENCE_PAIRS: Tuple[Tuple[str, str], ...] = (
    ("adm", "adm"), ("adm", "co"), ("adm", "pr"), ("adm", "stb"), ("co", "co"), ("co", "pr"),
)


def admissible_ideal_gap(af: ArgumentationFramework) -> ExtensionSet:
    """Admissible sets containing the ideal extension that are not adm-s1 extensions."""
    ideal = extensions(af, Semantics.ID)[0]
    closure = [e for e in extensions(af, Semantics.ADM) if is_subset(ideal, e)]
    accepted = set(vac_extensions(af, "adm-s1"))
    return canonical(e for e in closure if e not in accepted)


def _build() -> List[Claim]:
    claims = _grid_claims()

    def add(claim_id: str, kind: ClaimKind, statement: str, area: str, check: Check) -> None:
        claims.append(Claim(claim_id, kind, statement, area, check))

    add("COL-EQ", ClaimKind.CUSTOM,
        "for every row, vac(row,cf) = vac(row,na) and vac(row,adm) = vac(row,co) = vac(row,pr)",
        "grid columns", _column_equalities)
    add("SST-EQ", ClaimKind.CUSTOM, "for every row, vac(row,sst) = vac(row,adm)",
        "grid columns", _sst_column)
    add("ADM1-BOUNDS", ClaimKind.CUSTOM,
        "pr <= adm-s1 <= co, and the ideal extension is an adm-s1 extension below every other",
        "admissible row", _all(_subset("pr", "adm-s1"), _subset("adm-s1", "co"), _ideal_below_adm_s1))
    add("ADM2-EXIST", ClaimKind.NONEMPTY, "adm-s2 always has an extension",
        "admissible row", _nonempty("adm-s2"))
    add("ADM2-CHARA", ClaimKind.EQUALITY,
        "adm-s2 = stb together with the admissible sets that no stable extension strictly contains",
        "admissible row", _equal("adm-s2", stable_characterization))
    add("ADM2-EMPTY", ClaimKind.CUSTOM, "without stable extensions, adm-s2 = adm",
        "admissible row", _implies(lambda af: not _has_stable(af), _equal("adm-s2", "adm")))
    add("CO1-CHARA", ClaimKind.EQUALITY,
        "co-s1 = stb together with the complete extensions that no stable extension strictly contains",
        "complete row", _equal("co-s1", complete_stable_characterization))
    add("CO1-SUB", ClaimKind.SUBSET, "co-s1 <= adm-s2", "complete row", _subset("co-s1", "adm-s2"))
    add("ADM3-EQ", ClaimKind.EQUALITY,
        "vac(co,cf) = vac(pr,cf) = vac(adm,cf), and likewise for the na column",
        "admissible, complete and preferred rows",
        _all(_equal("vac:co:cf", "vac:adm:cf"), _equal("vac:pr:cf", "vac:adm:cf"),
             _equal("vac:co:na", "vac:adm:na"), _equal("vac:pr:na", "vac:adm:na")))
    add("CO-ID-EQ", ClaimKind.EQUALITY, "vac(co,id) = vac(adm,id)", "complete row",
        _equal("vac:co:id", "vac:adm:id"))
    add("GR-SELF", ClaimKind.EQUALITY, "vac(gr,gr) = gr", "grounded row", _equal("vac:gr:gr", "gr"))
    add("GR-ADM-IFF", ClaimKind.IFF,
        "for tau in adm, co, pr, sst: vac(gr,tau) = gr iff gr = pr", "grounded row",
        _all(*(_iff(_same(f"vac:gr:{tau}", "gr"), f"vac(gr,{tau}) = gr", _same("gr", "pr"), "gr = pr")
               for tau in ("adm", "co", "pr", "sst"))))
    add("GR-STB-IFF", ClaimKind.IFF,
        "vac(gr,stb) = gr iff no stable extension strictly contains the grounded extension", "grounded row",
        _iff(_same("vac:gr:stb", "gr"), "vac(gr,stb) = gr",
             _no_stable_above_grounded, "no stable strict superset of the grounded extension"))
    add("GR-ID-IFF", ClaimKind.IFF, "vac(gr,id) = gr iff gr = id", "grounded row",
        _iff(_same("vac:gr:id", "gr"), "vac(gr,id) = gr", _same("gr", "id"), "gr = id"))
    add("GR-CF-IFF", ClaimKind.IFF,
        "for tau in cf, na: vac(gr,tau) = gr iff the grounded extension is a vac(cf,cf) extension",
        "grounded row",
        _all(*(_iff(_same(f"vac:gr:{tau}", "gr"), f"vac(gr,{tau}) = gr",
                    lambda af: _grounded(af) in vac_extensions(af, "stb-cog"),
                    "grounded extension in vac(cf,cf)")
               for tau in ("cf", "na"))))
    add("ID-GRID", ClaimKind.EQUALITY, "vac(id,gr) = id and vac(id,id) = id", "ideal row",
        _all(_equal("vac:id:gr", "id"), _equal("vac:id:id", "id")))
    add("ID-ADM-IFF", ClaimKind.IFF,
        "for tau in adm, co, pr, sst: vac(id,tau) = id iff there is exactly one preferred extension",
        "ideal row",
        _all(*(_iff(_same(f"vac:id:{tau}", "id"), f"vac(id,{tau}) = id", _single_preferred, "|pr| = 1")
               for tau in ("adm", "co", "pr", "sst"))))
    add("ID-STB-IFF", ClaimKind.IFF, "vac(id,stb) = id iff there is at most one stable extension",
        "ideal row",
        _iff(_same("vac:id:stb", "id"), "vac(id,stb) = id",
             lambda af: len(extensions(af, Semantics.STB)) <= 1, "|stb| <= 1"))
    add("ID-STB-STRICT", ClaimKind.IFF,
        "vac(id,stb) = id iff no stable extension strictly contains the ideal extension", "ideal row",
        _iff(_same("vac:id:stb", "id"), "vac(id,stb) = id",
             _no_stable_above_ideal, "no stable strict superset of the ideal extension"))
    add("ID-CF-IFF", ClaimKind.IFF,
        "for tau in cf, na: vac(id,tau) = id iff the preferred extension is unique and in vac(adm,cf)",
        "ideal row",
        _all(*(_iff(_same(f"vac:id:{tau}", "id"), f"vac(id,{tau}) = id",
                    _single_preferred_in_adm_s3, "|pr| = 1 and pr <= vac(adm,cf)")
               for tau in ("cf", "na"))))
    add("CF-SST", ClaimKind.EQUALITY, "vac(cf,sst) = vac(cf,adm)", "conflict-free row",
        _equal("vac:cf:sst", "vac:cf:adm"))
    add("CF-CHAIN", ClaimKind.SUBSET, "vac(cf,adm) <= vac(cf,id) <= vac(cf,gr)", "conflict-free row",
        _all(_subset("vac:cf:adm", "vac:cf:id"), _subset("vac:cf:id", "vac:cf:gr")))
    add("NA-CF-EQ", ClaimKind.EQUALITY, "vac(na,tau) = vac(cf,tau) for tau in cf, na", "naive row",
        _all(_equal("vac:na:cf", "vac:cf:cf"), _equal("vac:na:na", "vac:cf:na")))
    add("ORACLE-COG", ClaimKind.ORACLE_MATCH,
        "vac(cf,cf) = stable extensions after deleting self-attackers", "conflict-free row",
        _equal("vac:cf:cf", stb_cog_direct))
    add("ORACLE-UB", ClaimKind.ORACLE_MATCH,
        "vac(cf,gr) = conflict-free sets containing everything they defend", "conflict-free row",
        _equal("vac:cf:gr", co_ub_direct))
    add("SST-LEVELS", ClaimKind.CUSTOM,
        "every vac(adm,cf) extension has a vac(sst,cf) extension whose reduct is a restriction of its reduct",
        "semi-stable row", _sst_levels)
    add("SST-EMPTYEQ", ClaimKind.CUSTOM,
        "for tau in cf, na: vac(sst,tau) is empty iff vac(adm,tau) is empty", "semi-stable row",
        _sst_empty_equivalence)
    add("CRED-EQ", ClaimKind.CUSTOM,
        "vacuity semantics with equal credulous unions on every base reduct give equal combinators",
        "credulous equivalence", _credulous_equivalence)
    add("SST-CF-STB", ClaimKind.CUSTOM, "with a stable extension present, vac(sst,cf) = stb",
        "semi-stable row", _implies(_has_stable, _equal("sst-s1", "stb")))
    add("REINSTATE-SUFF", ClaimKind.CUSTOM,
        "vac(sigma,tau) reinstates for sigma in cf, na and tau accepting every unattacked argument",
        "principles", _reinstatement_sufficiency)
    add("EXIST-SUFF", ClaimKind.NONEMPTY,
        "vac(sigma,tau) has an extension for the modular bases adm and co with tau below sigma",
        "principles", _all(*(_nonempty(f"vac:{b}:{t}") for b, t in EXISTENCE_PAIRS)))
    return claims


CLAIMS: Tuple[Claim, ...] = tuple(_build())
_BY_ID: Dict[str, Claim] = {claim.id: claim for claim in CLAIMS}


def registry() -> List[Claim]:
    return list(CLAIMS)


def find(claim_id: str) -> Claim:
    try:
        return _BY_ID[claim_id]
    except KeyError:
        raise KeyError(f"unknown claim '{claim_id}'") from None


def select(pattern: str) -> List[Claim]:
    """One claim by id, or every claim whose id starts with a pattern ending in ':'."""
    if pattern.endswith(":"):
        chosen = [claim for claim in CLAIMS if claim.id.startswith(pattern)]
        if not chosen:
            raise KeyError(f"no claim id starts with '{pattern}'")
        return chosen
    return [find(pattern)]


def ids(claims: Sequence[Claim]) -> List[str]:
    return [claim.id for claim in claims]
