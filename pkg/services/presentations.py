"""Relation catalog for P_{m,n} and B_{m,n} and a harness that checks it.

Every family is data: a word template for each side, index variables, sign
variables and the index conditions, written close to the way the relations
are printed.  Templates use ambient indices on m+n strands:

    a(i,j)   pure generator a_{ij}           s(k)   crossing sigma_k, m+1 <= k < m+n
    A(i)     loop generator a_i = a_{i,m+1}  x(k)   relabelled crossing sigma_{m+k}

An optional exponent follows a caret: ``^-1``, ``^e``, ``^-e`` for a sign
variable.  Conditions are comparison chains over index expressions, with
``or`` between alternatives.
"""

from __future__ import annotations

import itertools
import logging
import re
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Any, Dict, Iterable, List, Mapping, Optional, Tuple

from services.mixed_braid import (
    CrossGen,
    LoopGen,
    MixedContext,
    MixedGen,
    MixedLetterError,
    MixedWord,
    PureGen,
    check_letter,
    expand_mixed,
    invert_letter,
)
from services.word_problem import equal

logger = logging.getLogger("mixedbraid.presentations")


class InstanceExpansionError(ValueError):
    """Raised when a relation instance cannot be expanded into braid words."""


class CatalogError(ValueError):
    """Raised for unknown family ids or malformed templates."""


# ----------------------------------------------------------------------
# Template language
# ----------------------------------------------------------------------
_LETTER_RE = re.compile(r"(a|s|A|x)\(([^)]*)\)(?:\^(-?[a-z]|-1))?")
_EXPR_TOKEN_RE = re.compile(r"[+-]|\w+")
_CMP_RE = re.compile(r"(<=|>=|!=|<|>|=)")


def _eval_index(expr: str, env: Mapping[str, int]) -> int:
    total = 0
    sign = 1
    for token in _EXPR_TOKEN_RE.findall(expr.replace(" ", "")):
        if token == "+":
            sign = 1
        elif token == "-":
            sign = -1
        else:
            total += sign * (int(token) if token.isdigit() else env[token])
            sign = 1
    return total


def _compare(left: int, op: str, right: int) -> bool:
    if op == "<":
        return left < right
    if op == "<=":
        return left <= right
    if op == ">":
        return left > right
    if op == ">=":
        return left >= right
    if op == "=":
        return left == right
    return left != right


def condition_holds(condition: str, env: Mapping[str, int]) -> bool:
    for alternative in condition.split(" or "):
        parts = _CMP_RE.split(alternative.replace(" ", ""))
        values = [_eval_index(p, env) for p in parts[0::2]]
        ops = parts[1::2]
        if all(_compare(values[k], op, values[k + 1]) for k, op in enumerate(ops)):
            return True
    return False


@dataclass(frozen=True)
class TemplateLetter:
    kind: str
    indices: Tuple[str, ...]
    exponent: Optional[str]

    def sign(self, signs: Mapping[str, int]) -> int:
        if self.exponent is None:
            return 1
        if self.exponent == "-1":
            return -1
        if self.exponent.startswith("-"):
            return -signs[self.exponent[1:]]
        return signs[self.exponent]

    def build(self, env: Mapping[str, int], signs: Mapping[str, int], ctx: MixedContext) -> MixedGen:
        values = [_eval_index(e, env) for e in self.indices]
        sign = self.sign(signs)
        if self.kind == "a":
            letter: MixedGen = PureGen(values[0], values[1], sign)
        elif self.kind == "s":
            k = values[0]
            if not ctx.m + 1 <= k <= ctx.strands - 1:
                raise MixedLetterError(
                    f"sigma_{k} is not a crossing of moving strands (needs {ctx.m + 1}..{ctx.strands - 1})"
                )
            letter = CrossGen(k - ctx.m, sign)
        elif self.kind == "A":
            letter = LoopGen(values[0], sign)
        else:
            letter = CrossGen(values[0], sign)
        check_letter(letter, ctx)
        return letter


def parse_template(text: str) -> Tuple[TemplateLetter, ...]:
    letters: List[TemplateLetter] = []
    pos = 0
    text = text.strip()
    while pos < len(text):
        if text[pos].isspace():
            pos += 1
            continue
        match = _LETTER_RE.match(text, pos)
        if not match:
            raise CatalogError(f"Bad template near {text[pos:]!r}")
        kind, args, exponent = match.groups()
        letters.append(TemplateLetter(kind, tuple(a.strip() for a in args.split(",")), exponent))
        pos = match.end()
    return tuple(letters)


# ----------------------------------------------------------------------
# Catalog
# ----------------------------------------------------------------------
@dataclass(frozen=True)
class RelationFamily:
    id: str
    label: str
    group: str
    lhs: str
    rhs: str
    variables: Tuple[str, ...]
    conditions: Tuple[str, ...] = ()
    sign_variables: Tuple[str, ...] = ()
    note: str = ""

    @property
    def lhs_template(self) -> Tuple[TemplateLetter, ...]:
        return parse_template(self.lhs)

    @property
    def rhs_template(self) -> Tuple[TemplateLetter, ...]:
        return parse_template(self.rhs)


_GEN = "m+1 <= j <= m+n"
_FIXED_I = "1 <= i <= m"

CATALOG: Tuple[RelationFamily, ...] = (
    # pure braid relations of P_{m,n}
    RelationFamily(
        "P1", "P1", "P",
        "a(i,j)^-1 a(r,s) a(i,j)", "a(r,s)",
        ("i", "j", "r", "s"),
        ("i < j", "r < s", _GEN, "m+1 <= s", "i < j < r < s or r < i < j < s"),
    ),
    RelationFamily(
        "P2", "P2", "P",
        "a(i,j)^-1 a(j,s) a(i,j)", "a(i,s) a(j,s) a(i,s)^-1",
        ("i", "j", "s"),
        (_GEN, "i < j < s", "s <= m+n"),
    ),
    RelationFamily(
        "P3", "P3", "P",
        "a(i,j)^-1 a(i,s) a(i,j)", "a(i,s) a(j,s) a(i,s) a(j,s)^-1 a(i,s)^-1",
        ("i", "j", "s"),
        (_GEN, "i < j < s", "s <= m+n"),
    ),
    RelationFamily(
        "P4", "P4", "P",
        "a(i,j)^-1 a(r,s) a(i,j)",
        "a(i,s) a(j,s) a(i,s)^-1 a(j,s)^-1 a(r,s) a(j,s) a(i,s) a(j,s)^-1 a(i,s)^-1",
        ("i", "r", "j", "s"),
        (_GEN, "i < r < j < s", "s <= m+n"),
    ),
    # mixed relations: conjugation of pure generators by crossings
    RelationFamily(
        "M1", "M1", "M",
        "s(k)^-1 a(i,j)^e s(k)", "a(i,j)^e",
        ("i", "j", "k"),
        ("i < j", _GEN, "m+1 <= k <= m+n-1", "k <= i-2 or i+1 <= k <= j-2 or k >= j+1"),
        ("e",),
    ),
    RelationFamily(
        "M2", "M2", "M",
        "s(i-1)^-1 a(i,j)^e s(i-1)", "a(i-1,j)^e",
        ("i", "j"),
        ("2 <= i < j", _GEN),
        ("e",),
    ),
    RelationFamily(
        "M3", "M3", "M",
        "s(i)^-1 a(i,j)^e s(i)", "a(i,j) a(i+1,j)^e a(i,j)^-1",
        ("i", "j"),
        ("i < j", _GEN),
        ("e",),
    ),
    RelationFamily(
        "M4", "M4", "M",
        "s(j-1)^-1 a(i,j)^e s(j-1)", "a(i,j-1)^e",
        ("i", "j"),
        ("i < j", _GEN),
        ("e",),
    ),
    RelationFamily(
        "M5", "M5", "M",
        "s(j)^-1 a(i,j)^e s(j)", "a(i,j) a(i,j+1)^e a(i,j)^-1",
        ("i", "j"),
        ("i < j", _GEN),
        ("e",),
    ),
    # relations among the crossings of moving strands
    RelationFamily(
        "S1", "Σ1", "S",
        "s(i) s(k)", "s(k) s(i)",
        ("i", "k"),
        ("m+1 <= i", "i+1 < k <= m+n-1"),
    ),
    RelationFamily(
        "S2", "Σ2", "S",
        "s(i) s(i+1) s(i)", "s(i+1) s(i) s(i+1)",
        ("i",),
        ("m+1 <= i <= m+n-2",),
    ),
    RelationFamily(
        "S3", "Σ3", "S",
        "s(i) s(i)", "a(i,i+1)",
        ("i",),
        ("m+1 <= i <= m+n-1",),
        note="index range extended to the last crossing so every a_{i,i+1} is defined",
    ),
    # first reduction: relations kept after eliminating moving a_ij
    RelationFamily(
        "P'1", "P′1", "P'",
        "a(i,j) a(r,s)", "a(r,s) a(i,j)",
        ("r", "i", "j", "s"),
        ("r < i < j < s", "1 <= r <= m", _FIXED_I, _GEN, "s <= m+n"),
    ),
    RelationFamily(
        "P'2", "P′2", "P'",
        "a(i,j)^-1 a(j,s) a(i,j)", "a(i,s) a(j,s) a(i,s)^-1",
        ("i", "j", "s"),
        ("i < j < s", _FIXED_I, _GEN, "s <= m+n"),
    ),
    RelationFamily(
        "P'3", "P′3", "P'",
        "a(i,j)^-1 a(i,s) a(i,j)", "a(i,s) a(j,s) a(i,s) a(j,s)^-1 a(i,s)^-1",
        ("i", "j", "s"),
        ("i < j < s", _FIXED_I, _GEN, "s <= m+n"),
    ),
    RelationFamily(
        "P'4", "P′4", "P'",
        "a(i,j)^-1 a(r,s) a(i,j)",
        "a(i,s) a(j,s) a(i,s)^-1 a(j,s)^-1 a(r,s) a(j,s) a(i,s) a(j,s)^-1 a(i,s)^-1",
        ("i", "r", "j", "s"),
        ("i < r < j < s", _FIXED_I, "1 <= r <= m+n-1", _GEN, "s <= m+n"),
    ),
    RelationFamily(
        "M'1", "M′1", "M'",
        "s(k)^-1 a(i,j)^e s(k)", "a(i,j)^e",
        ("i", "j", "k"),
        (_FIXED_I, _GEN, "m+1 <= k <= m+n-1", "k <= j-2 or k >= j+1"),
        ("e",),
    ),
    RelationFamily(
        "M'2", "M′2", "M'",
        "a(i,j)^e", "s(j-1) a(i,j-1)^e s(j-1)^-1",
        ("i", "j"),
        (_FIXED_I, _GEN),
        ("e",),
    ),
    RelationFamily(
        "M'3", "M′3", "M'",
        "s(j)^-1 a(i,j)^e s(j)", "a(i,j) a(i,j+1)^e a(i,j)^-1",
        ("i", "j"),
        (_FIXED_I, _GEN),
        ("e",),
    ),
    # presentation on the a_{i,j} with i <= m and the crossings
    RelationFamily(
        "R1", "(1)", "R",
        "s(k)^-1 a(i,j)^e s(k)", "a(i,j)^e",
        ("i", "j", "k"),
        (_FIXED_I, _GEN, "m+1 <= k <= m+n-1", "k <= j-2 or k >= j+1"),
        ("e",),
    ),
    RelationFamily(
        "R2", "(2)", "R",
        "a(i,j)^e", "s(j-1) a(i,j-1)^e s(j-1)^-1",
        ("i", "j"),
        (_FIXED_I, "m+2 <= j <= m+n"),
        ("e",),
    ),
    RelationFamily(
        "R3", "(3)", "R",
        "s(j)^-1 a(i,j)^e s(j)", "a(i,j) a(i,j+1)^e a(i,j)^-1",
        ("i", "j"),
        (_FIXED_I, "m+1 <= j <= m+n-1"),
        ("e",),
    ),
    RelationFamily(
        "R4", "(4)", "R",
        "a(i,j)^e a(r,j+1)^f", "a(r,j+1)^f a(i,j)^e",
        ("r", "i", "j"),
        ("1 <= r < i <= m", "m+1 <= j <= m+n-1"),
        ("e", "f"),
    ),
    RelationFamily(
        "R3e", "(3) equivalent", "R",
        "s(j) a(i,j) s(j) a(i,j)^e", "a(i,j)^e s(j) a(i,j) s(j)",
        ("i", "j"),
        (_FIXED_I, "m+1 <= j <= m+n-1"),
        ("e",),
    ),
    RelationFamily(
        "R4e", "(4) equivalent", "R",
        "a(i,j)^e s(j) a(r,j)^f s(j)^-1", "s(j) a(r,j)^f s(j)^-1 a(i,j)^e",
        ("r", "i", "j"),
        ("1 <= r < i <= m", "m+1 <= j <= m+n-1"),
        ("e", "f"),
    ),
    # irredundant presentation on a_{i,m+1} and the crossings
    RelationFamily(
        "I1", "(1′)", "I",
        "s(k)^-1 a(i,m+1)^e s(k)", "a(i,m+1)^e",
        ("i", "k"),
        (_FIXED_I, "m+2 <= k <= m+n-1"),
        ("e",),
    ),
    RelationFamily(
        "I2", "(2′)", "I",
        "a(i,m+1)^e s(m+1) a(i,m+1) s(m+1)", "s(m+1) a(i,m+1) s(m+1) a(i,m+1)^e",
        ("i",),
        (_FIXED_I, "n >= 2"),
        ("e",),
    ),
    RelationFamily(
        "I3", "(3′)", "I",
        "a(i,m+1)^e s(m+1) a(r,m+1)^f s(m+1)^-1",
        "s(m+1) a(r,m+1)^f s(m+1)^-1 a(i,m+1)^e",
        ("r", "i"),
        ("1 <= r < i <= m", "n >= 2"),
        ("e", "f"),
    ),
    RelationFamily(
        "I3e", "(3′) equivalent", "I",
        "a(i,m+1)^e a(r,m+2)^f", "a(r,m+2)^f a(i,m+1)^e",
        ("r", "i"),
        ("1 <= r < i <= m", "n >= 2"),
        ("e", "f"),
    ),
    # final presentation in the relabelled alphabet a_1..a_m, sigma_1..sigma_{n-1}
    RelationFamily(
        "F1", "F1", "F",
        "x(k) x(j)", "x(j) x(k)",
        ("k", "j"),
        ("1 <= k", "k+1 < j <= n-1"),
    ),
    RelationFamily(
        "F2", "F2", "F",
        "x(k) x(k+1) x(k)", "x(k+1) x(k) x(k+1)",
        ("k",),
        ("1 <= k <= n-1",),
        note="printed range reaches k = n-1, where sigma_n does not exist; those tuples are skipped",
    ),
    RelationFamily(
        "F3", "F3", "F",
        "A(i) x(k)", "x(k) A(i)",
        ("i", "k"),
        (_FIXED_I, "2 <= k <= n-1"),
    ),
    RelationFamily(
        "F4", "F4", "F",
        "A(i) x(1) A(i) x(1)", "x(1) A(i) x(1) A(i)",
        ("i",),
        (_FIXED_I, "n >= 2"),
    ),
    RelationFamily(
        "F5", "F5", "F",
        "A(i) x(1) A(r) x(1)^-1", "x(1) A(r) x(1)^-1 A(i)",
        ("r", "i"),
        ("1 <= r < i <= m", "n >= 2"),
    ),
)

FAMILY_IDS: Tuple[str, ...] = tuple(f.id for f in CATALOG)
_BY_ID: Dict[str, RelationFamily] = {f.id: f for f in CATALOG}
PURE_FAMILIES: Tuple[str, ...] = ("P1", "P2", "P3", "P4")


def get_family(family_id: str) -> RelationFamily:
    try:
        return _BY_ID[family_id]
    except KeyError as exc:
        raise CatalogError(f"Unknown relation family {family_id!r}") from exc


def select_families(selection: Optional[Iterable[str]] = None) -> Tuple[RelationFamily, ...]:
    """Resolve ids and group names (``P``, ``M'``, ``all`` ...) to catalog order."""
    if selection is None:
        return CATALOG
    wanted: set[str] = set()
    for token in selection:
        token = token.strip()
        if not token:
            continue
        if token == "all":
            return CATALOG
        groups = [f.id for f in CATALOG if f.group == token]
        if groups:
            wanted.update(groups)
        else:
            wanted.add(get_family(token).id)
    return tuple(f for f in CATALOG if f.id in wanted)


# ----------------------------------------------------------------------
# Instantiation
# ----------------------------------------------------------------------
@dataclass(frozen=True)
class RelationInstance:
    family: str
    bindings: Tuple[Tuple[str, int], ...]
    signs: Tuple[Tuple[str, int], ...]
    lhs: MixedWord
    rhs: MixedWord

    def describe(self) -> str:
        parts = [f"{k}={v}" for k, v in self.bindings]
        parts += [f"{k}={'+' if v > 0 else '-'}" for k, v in self.signs]
        return f"{self.family}({', '.join(parts)})"


@dataclass(frozen=True)
class SkippedTuple:
    family: str
    bindings: Tuple[Tuple[str, int], ...]
    reason: str


@dataclass
class Instantiation:
    family: RelationFamily
    instances: List[RelationInstance] = field(default_factory=list)
    skipped: List[SkippedTuple] = field(default_factory=list)
    relation_count: int = 0


def instantiate_family(family: RelationFamily, ctx: MixedContext) -> Instantiation:
    lhs_t, rhs_t = family.lhs_template, family.rhs_template
    result = Instantiation(family)
    base = {"m": ctx.m, "n": ctx.n}
    for values in itertools.product(range(1, ctx.strands + 1), repeat=len(family.variables)):
        env = dict(base, **dict(zip(family.variables, values)))
        if not all(condition_holds(c, env) for c in family.conditions):
            continue
        bindings = tuple(zip(family.variables, values))
        built: List[RelationInstance] = []
        try:
            for sign_values in itertools.product((1, -1), repeat=len(family.sign_variables)):
                signs = dict(zip(family.sign_variables, sign_values))
                lhs = MixedWord(ctx, tuple(t.build(env, signs, ctx) for t in lhs_t))
                rhs = MixedWord(ctx, tuple(t.build(env, signs, ctx) for t in rhs_t))
                built.append(
                    RelationInstance(family.id, bindings, tuple(signs.items()), lhs, rhs)
                )
        except MixedLetterError as exc:
            logger.info("%s skipped %s: %s", family.id, dict(bindings), exc)
            result.skipped.append(SkippedTuple(family.id, bindings, str(exc)))
            continue
        result.relation_count += 1
        result.instances.extend(built)
    return result


def instantiate(family: RelationFamily, ctx: MixedContext) -> List[RelationInstance]:
    return instantiate_family(family, ctx).instances


def instantiate_ambient(family: RelationFamily, strands: int) -> List[RelationInstance]:
    """Instantiate a pure braid family over all of P_N, using P_{1,N-1} = P_N."""
    if family.id not in PURE_FAMILIES:
        raise CatalogError(f"{family.id} is not a pure braid family")
    if strands < 2:
        return []
    return instantiate(family, MixedContext(1, strands - 1))


# ----------------------------------------------------------------------
# Verification
# ----------------------------------------------------------------------
def verify_instance(inst: RelationInstance) -> bool:
    try:
        lhs = expand_mixed(inst.lhs)
        rhs = expand_mixed(inst.rhs)
    except (MixedLetterError, ValueError) as exc:
        raise InstanceExpansionError(f"Cannot expand {inst.describe()}: {exc}") from exc
    return equal(lhs, rhs)


def corrupt_instance(inst: RelationInstance) -> RelationInstance:
    """Flip the sign of the first right-hand letter; used to self-test the harness."""
    if not inst.rhs.letters:
        raise ValueError("Cannot corrupt an empty right-hand side")
    letters = (invert_letter(inst.rhs.letters[0]),) + inst.rhs.letters[1:]
    return RelationInstance(
        inst.family, inst.bindings, inst.signs, inst.lhs, MixedWord(inst.rhs.ctx, letters)
    )


@dataclass
class InstanceResult:
    instance: RelationInstance
    passed: bool


@dataclass
class FamilyReport:
    family: RelationFamily
    relation_count: int
    results: List[InstanceResult]
    skipped: List[SkippedTuple]
    seconds: float = 0.0

    @property
    def instances(self) -> int:
        return len(self.results)

    @property
    def failures(self) -> List[InstanceResult]:
        return [r for r in self.results if not r.passed]

    @property
    def passed(self) -> bool:
        return not self.failures

    @property
    def vacuous(self) -> bool:
        return not self.results

    def to_record(self) -> Dict[str, Any]:
        return {
            "family": self.family.id,
            "label": self.family.label,
            "relations": self.relation_count,
            "instances": self.instances,
            "passed": sum(1 for r in self.results if r.passed),
            "failed": [r.instance.describe() for r in self.failures],
            "skipped": [
                {"bindings": dict(s.bindings), "reason": s.reason} for s in self.skipped
            ],
            "vacuous": self.vacuous,
        }


@dataclass
class VerificationReport:
    ctx: MixedContext
    families: List[FamilyReport]

    @property
    def total_instances(self) -> int:
        return sum(f.instances for f in self.families)

    @property
    def total_relations(self) -> int:
        return sum(f.relation_count for f in self.families)

    @property
    def total_failures(self) -> int:
        return sum(len(f.failures) for f in self.families)

    @property
    def total_skipped(self) -> int:
        return sum(len(f.skipped) for f in self.families)

    @property
    def passed(self) -> bool:
        return all(f.passed for f in self.families)

    def to_record(self) -> Dict[str, Any]:
        return {
            "m": self.ctx.m,
            "n": self.ctx.n,
            "passed": self.passed,
            "relations": self.total_relations,
            "instances": self.total_instances,
            "failures": self.total_failures,
            "skipped": self.total_skipped,
            "families": [f.to_record() for f in self.families],
        }


def verify_all(
    ctx: MixedContext,
    families: Optional[Iterable[str]] = None,
    workers: int = 1,
) -> VerificationReport:
    """Check every instance of the selected families; results keep catalog order."""
    selected = select_families(families)
    plans = [instantiate_family(f, ctx) for f in selected]
    flat: List[RelationInstance] = [inst for plan in plans for inst in plan.instances]

    started = time.monotonic()
    if workers > 1 and len(flat) > 1:
        with ThreadPoolExecutor(max_workers=workers, thread_name_prefix="mixedbraid-verify") as pool:
            outcomes = list(pool.map(verify_instance, flat))
    else:
        outcomes = [verify_instance(inst) for inst in flat]
    logger.debug("verified %d instances in %.3fs", len(flat), time.monotonic() - started)

    reports: List[FamilyReport] = []
    cursor = 0
    for plan in plans:
        count = len(plan.instances)
        results = [
            InstanceResult(inst, ok)
            for inst, ok in zip(plan.instances, outcomes[cursor : cursor + count])
        ]
        cursor += count
        for r in results:
            if not r.passed:
                logger.warning("relation %s does not hold in %s", r.instance.describe(), ctx)
        reports.append(FamilyReport(plan.family, plan.relation_count, results, plan.skipped))
    return VerificationReport(ctx, reports)


# ----------------------------------------------------------------------
# Counting
# ----------------------------------------------------------------------
def count_generators(m: int, n: int) -> int:
    return n * (n + 2 * m - 1) // 2


def enumerate_generators(m: int, n: int) -> List[Tuple[int, int]]:
    return [(i, j) for j in range(m + 1, m + n + 1) for i in range(1, j)]


def count_pn_generators(n: int) -> int:
    return n * (n - 1) // 2


def count_pn_relations(n: int) -> int:
    return sum(k * (k + 1) ** 2 for k in range(1, n - 1)) // 2


def count_pure_relations(m: int, n: int) -> int:
    head = sum(k * (k + 1) ** 2 for k in range(m - 1, m + n - 1)) // 2
    tail = (m - 1) * m * n * (n + 2 * m - 1) // 4
    return head - tail


def enumerate_pure_relations(m: int, n: int) -> int:
    """Index tuples of the pure braid relations P1-P4 in P_{m,n}."""
    ctx = MixedContext(m, n)
    return sum(instantiate_family(get_family(fid), ctx).relation_count for fid in PURE_FAMILIES)


def count_summary(m: int, n: int) -> Dict[str, Any]:
    return {
        "m": m,
        "n": n,
        "generators": count_generators(m, n),
        "generators_enumerated": len(enumerate_generators(m, n)),
        "relations": count_pure_relations(m, n),
        "relations_enumerated": enumerate_pure_relations(m, n),
        "ambient_generators": count_pn_generators(m + n),
        "ambient_relations": count_pn_relations(m + n),
    }
