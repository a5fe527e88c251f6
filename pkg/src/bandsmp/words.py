"""Free-semigroup words over variables x1, x2, ... and band identities.

Words are tuples of 1-based variable indices; the empty tuple is the
empty word. Includes the left-cut s, sigma, duals, the recursive normal
form map h_n with its length bound p_n, the hard-coded G/H/I words for
n = 2..4, and exhaustive identity checking on bands.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Sequence, Union

from .band import Band
from .errors import ArityTooLarge, EmptyWord, UnboundVariable, UnsupportedIndex

Word = tuple[int, ...]

DEFAULT_IDENTITY_BUDGET = 10_000_000


def word(*letters: int) -> Word:
    return tuple(letters)


def word_from_text(text: str) -> Word:
    """Parse the CLI word syntax: space-separated variable indices."""
    return tuple(int(v) for v in text.split())


def word_to_text(w: Word) -> str:
    return " ".join(str(v) for v in w)


def content(w: Word) -> frozenset[int]:
    """The set of variables occurring in w."""
    return frozenset(w)


def left_cut_s(w: Word) -> Word:
    """The longest left cut missing exactly one variable of w.

    For w = uxv with c(u) != c(ux) = c(w) this is u; s of the empty
    word is empty.
    """
    seen: set[int] = set()
    last_new = -1
    for i, v in enumerate(w):
        if v not in seen:
            seen.add(v)
            last_new = i
    return w[:last_new] if last_new >= 0 else ()


def sigma(w: Word) -> Word:
    """One-letter word: the last variable under first-occurrence order."""
    seen: set[int] = set()
    last = None
    for v in w:
        if v not in seen:
            seen.add(v)
            last = v
    return (last,) if last is not None else ()


def dual_word(w: Word) -> Word:
    return tuple(reversed(w))


def h_n(n: int, w: Word) -> Word:
    """The normal-form word map h_n; h_n(w) = h_n(s(w)) sigma(w) dual(h_{n-1}(dual w))."""
    if n < 2:
        raise UnsupportedIndex(f"h_n is defined for n >= 2, got {n}")
    w = tuple(w)
    if not w:
        return ()
    if n == 2:
        return (w[0],)
    return h_n(n, left_cut_s(w)) + sigma(w) + dual_word(h_n(n - 1, dual_word(w)))


def length_bound_p(n: int, k: int) -> int:
    """Length bound for h_n on words over k variables: p_2 = 1, p_{n+1}(k) = k(1 + p_n(k))."""
    if n < 2:
        raise UnsupportedIndex(f"p_n is defined for n >= 2, got {n}")
    if k < 1:
        raise UnsupportedIndex(f"k must be positive, got {k}")
    if n == 2:
        return 1
    return k * (1 + length_bound_p(n - 1, k))


_GHI: dict[tuple[str, int], Word] = {
    ("G", 2): (2, 1),
    ("H", 2): (2,),
    ("I", 2): (2, 1, 2),
    ("G", 3): (3, 1, 2),
    ("H", 3): (3, 1, 2, 3, 2),
    ("I", 3): (3, 1, 2, 3, 2, 1, 2),
    ("G", 4): (4, 2, 1, 3),
    ("H", 4): (4, 2, 1, 3, 4, 2, 3, 2, 1, 3),
    ("I", 4): (4, 2, 1, 3, 4, 2, 1, 2, 3, 2, 1, 3),
}


def ghi_word(family: str, n: int) -> Word:
    """The literal G_n / H_n / I_n word for n in {2, 3, 4}."""
    key = (family, n)
    if key not in _GHI:
        raise UnsupportedIndex(
            f"no hard-coded word for {family}_{n}; only G/H/I with n in 2..4"
        )
    return _GHI[key]


@dataclass(frozen=True)
class Identity:
    """An equation lhs ~ rhs between nonempty words."""

    lhs: Word
    rhs: Word

    def __post_init__(self):
        if not self.lhs and not self.rhs:
            raise EmptyWord("an identity needs at least one nonempty side")

    def dual(self) -> "Identity":
        return Identity(dual_word(self.lhs), dual_word(self.rhs))


def eval_word(band: Band, w: Word, assignment: Sequence[int]) -> int:
    """The term function of w at the assignment (assignment[i] is x_{i+1})."""
    if not w:
        raise EmptyWord("cannot evaluate the empty word in a band")
    t = band.table
    try:
        acc = assignment[w[0] - 1]
        for v in w[1:]:
            acc = t[acc][assignment[v - 1]]
    except IndexError:
        missing = max(w)
        raise UnboundVariable(
            f"assignment of length {len(assignment)} does not cover x{missing}"
        ) from None
    return acc


def satisfies_identity(
    band: Band,
    identity: Identity,
    budget: int = DEFAULT_IDENTITY_BUDGET,
) -> Union[bool, tuple[int, ...]]:
    """Exhaustively check an identity; True, or the first counterexample.

    Assignments run in odometer order over the variables of the identity
    (unconstrained variables pinned to element 0), so the returned
    counterexample is the lexicographically least one.
    """
    if not identity.lhs or not identity.rhs:
        raise EmptyWord("identity satisfaction needs both sides nonempty")
    variables = sorted(content(identity.lhs) | content(identity.rhs))
    m = band.order
    if m ** len(variables) > budget:
        raise ArityTooLarge(
            f"{m}^{len(variables)} assignments exceed the budget of {budget}"
        )
    width = max(variables)
    assignment = [0] * width
    for values in product(range(m), repeat=len(variables)):
        for var, val in zip(variables, values):
            assignment[var - 1] = val
        if eval_word(band, identity.lhs, assignment) != eval_word(
            band, identity.rhs, assignment
        ):
            return tuple(assignment)
    return True


def random_word(rng, max_var: int, max_len: int) -> Word:
    """A nonempty random word; used by the property-test suites."""
    length = rng.randint(1, max_len)
    return tuple(rng.randint(1, max_var) for _ in range(length))
