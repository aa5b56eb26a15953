"""Definition-literal reference checks.

Nothing here reuses the decision procedures: θ, Δ, regularity, orbits and
hereditary closures are recomputed straight from the atom image tables on
whole elements. Everything is exponential and meant for small instances.
"""

import logging
from typing import Dict, FrozenSet, Iterable, List, Optional, Set, Tuple

from pydantic import BaseModel, ConfigDict

from ..config import Config
from ..errors import TooLarge
from ..schemas.algebra import Instance

logger = logging.getLogger(__name__)


class TailAxioms(BaseModel):
    """Verdict per tail axiom; ``nonempty`` is the requirement that T ≠ ∅."""

    model_config = ConfigDict(frozen=True)

    nonempty: bool
    t1: bool
    t2: bool
    t3: bool
    t4: bool
    t5: bool
    t6: bool

    def all(self) -> bool:
        return self.nonempty and self.t1 and self.t2 and self.t3 and self.t4 and self.t5 and self.t6


class _Literal:
    """Element-level view of an instance with memoized θ, Δ and regularity."""

    def __init__(self, inst: Instance):
        self.n = inst.n
        self.full = (1 << inst.n) - 1
        self.labels = range(len(inst.labels))
        self.images = [action.images for action in inst.actions]
        self._theta: Dict[Tuple[int, int], int] = {}
        self._regular: Dict[int, bool] = {}

    def elements(self) -> range:
        return range(self.full + 1)

    def below(self, a: int) -> List[int]:
        return [b for b in self.elements() if b & a == b]

    def theta(self, alpha: int, a: int) -> int:
        key = (alpha, a)
        if key not in self._theta:
            out = 0
            for i in range(self.n):
                if a >> i & 1:
                    out |= self.images[alpha][i]
            self._theta[key] = out
        return self._theta[key]

    def theta_word(self, word: Iterable[int], a: int) -> int:
        for alpha in word:
            a = self.theta(alpha, a)
        return a

    def delta(self, a: int) -> FrozenSet[int]:
        return frozenset(alpha for alpha in self.labels if self.theta(alpha, a))

    def is_regular(self, a: int) -> bool:
        """Every nonempty B ⊆ A has a nonempty, finite Δ_B."""
        if a not in self._regular:
            self._regular[a] = all(self.delta(b) for b in self.below(a) if b)
        return self._regular[a]

    def orbit(self, a: int) -> Set[int]:
        """{θ_β(A) : β ∈ L*}, including A itself."""
        seen = {a}
        stack = [a]
        while stack:
            x = stack.pop()
            for alpha in self.labels:
                y = self.theta(alpha, x)
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
        return seen

    def hereditary_top(self, a: int) -> int:
        """Top of H(A): the union of every θ_β(A)."""
        out = 0
        for x in self.orbit(a):
            out |= x
        return out


def _guard(inst: Instance) -> None:
    cap = Config.get_limits_oracle_max_atoms()
    if inst.n > cap:
        raise TooLarge(f"oracle needs at most {cap} atoms, got {inst.n}")


""" Condition (L) """


def brute_condition_L(inst: Instance, max_len: Optional[int] = None) -> bool:
    """True iff no (β, A) with |β| ≤ max_len is a cycle without exits.

    A label can only follow a trajectory set S when every nonempty B ⊆ S is
    regular with Δ_B = {label}, so at most one label continues each prefix.
    """
    lit = _Literal(inst)
    if max_len is None:
        max_len = min(2 ** inst.n, 16)

    def exit_free(s: int, alpha: int) -> bool:
        return all(lit.is_regular(b) and lit.delta(b) == {alpha} for b in lit.below(s) if b)

    for a in lit.elements():
        if not a:
            continue
        s = a
        word: List[int] = []
        for _ in range(max_len):
            alpha = next((label for label in lit.labels if exit_free(s, label)), None)
            if alpha is None:
                break
            word.append(alpha)
            s = lit.theta(alpha, s)
            if s == a and all(lit.theta_word(word, b) == b for b in lit.below(a)):
                logger.debug("literal cycle without exits on %s of length %d", bin(a), len(word))
                return False
    return True


""" tails """


def brute_tail_axioms(inst: Instance, tail: Iterable[int]) -> TailAxioms:
    _guard(inst)
    lit = _Literal(inst)
    t = frozenset(tail)
    elements = lit.elements()
    orbits = {a: lit.orbit(a) for a in t}

    nonempty = bool(t)
    t1 = 0 not in t
    t2 = all(
        a in t for a in elements for alpha in lit.labels if lit.theta(alpha, a) in t
    )
    t3 = all(
        a in t or b in t for a in elements for b in elements if a | b in t
    )
    t4 = all(b in t for a in t for b in elements if a & b == a)
    t5 = all(
        any(lit.theta(alpha, a) in t for alpha in lit.labels)
        for a in t
        if lit.is_regular(a)
    )
    t6 = all(
        any(x & y in t for x in orbits[a] for y in orbits[b])
        for a in t
        for b in t
    )
    return TailAxioms(nonempty=nonempty, t1=t1, t2=t2, t3=t3, t4=t4, t5=t5, t6=t6)


""" minimality """


def brute_minimality_45(inst: Instance) -> Tuple[bool, bool]:
    """Both ∀x ∈ L^∞ clauses of the minimality characterization.

    An infinite word keeps θ_{x_{1,n}}(B) outside H(A) for every n exactly
    when the values modulo H(A) reach a cycle of nonzero classes.
    """
    _guard(inst)
    lit = _Literal(inst)
    if lit.n == 0:
        return True, True
    memo: Dict[Tuple[int, int], bool] = {}

    def escapes(h: int, start: int) -> bool:
        key = (h, start)
        if key in memo:
            return memo[key]
        # DFS for a cycle among nonzero classes reachable from start
        state: Dict[int, int] = {}
        found = False

        def visit(v: int) -> bool:
            state[v] = 1
            for alpha in lit.labels:
                w = lit.theta(alpha, v) & ~h
                if not w:
                    continue
                if state.get(w) == 1:
                    return True
                if w not in state and visit(w):
                    return True
            state[v] = 2
            return False

        cls = start & ~h
        if cls:
            found = visit(cls)
        memo[key] = found
        return found

    def regular_remainder(b: int, h: int, c: int) -> bool:
        return lit.is_regular(c) and (b & ~c) & ~h == 0

    item4 = item5 = True
    for a in lit.elements():
        if not a:
            continue
        h = lit.hereditary_top(a)
        for b in lit.elements():
            if item4:
                has_c = any(regular_remainder(b, h, c) for c in lit.elements())
                if not has_c or escapes(h, b):
                    item4 = False
            if item5:
                if not any(
                    regular_remainder(b, h, c) and not escapes(h, c) for c in lit.elements()
                ):
                    item5 = False
            if not item4 and not item5:
                return False, False
    return item4, item5


""" saturation """


def brute_saturation_formula(inst: Instance, a: int) -> int:
    """Top of S(H(A)) from its level formula.

    B belongs iff for some k every θ_β(B) with |β| = k lies in H(A) and
    every θ_γ(B) with |γ| < k lies in H(A) ⊕ B_reg. Depth n suffices.
    """
    lit = _Literal(inst)
    h = lit.hereditary_top(a)

    def in_sum(x: int) -> bool:
        return lit.is_regular(x & ~h)

    top = 0
    for b in lit.elements():
        level = {b}
        shallow_ok = True
        for _ in range(lit.n + 1):
            if all(x & ~h == 0 for x in level):
                if shallow_ok:
                    top |= b
                break
            shallow_ok = shallow_ok and all(in_sum(x) for x in level)
            if not shallow_ok:
                break
            level = {lit.theta(alpha, x) for x in level for alpha in lit.labels}
    return top
