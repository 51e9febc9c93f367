"""Type-B ground combinatorics.

Signed elements are plain nonzero integers: the barred element ``ī`` is ``-i``,
so the standard involution on ``[±n]`` is negation.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Callable, Dict, FrozenSet, Iterable, Iterator, Mapping, Sequence, Tuple, TypeVar

T = TypeVar("T")


def element_key(x: int) -> Tuple[int, int]:
    # display order inside a block: negatives first, then by absolute value
    return (0 if x < 0 else 1, abs(x))


def format_element(x: int, unicode: bool = False) -> str:
    if unicode and x < 0:
        return "".join(ch + "̄" for ch in str(-x))
    return str(x)


# ---------------------------------------------------------------------------
# H-sets
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class HSet:
    """A finite set of nonzero integers with a fixed-point-free involution."""

    elements: FrozenSet[int]
    pairs: Tuple[Tuple[int, int], ...]

    def __init__(self, involution: Mapping[int, int]):
        elements = frozenset(involution)
        for x, y in involution.items():
            if x == 0:
                raise ValueError("0 is not a valid element")
            if y not in elements:
                raise ValueError(f"involution sends {x} outside the set")
            if x == y:
                raise ValueError(f"involution fixes {x}")
            if involution[y] != x:
                raise ValueError(f"involution is not an involution at {x}")
        pairs = tuple(sorted((min(x, y), max(x, y)) for x, y in involution.items() if x < y))
        object.__setattr__(self, "elements", elements)
        object.__setattr__(self, "pairs", pairs)

    @classmethod
    def from_pairs(cls, pairs: Iterable[Tuple[int, int]]) -> "HSet":
        inv: Dict[int, int] = {}
        for x, y in pairs:
            if x in inv or y in inv:
                raise ValueError(f"element repeated in pair ({x}, {y})")
            inv[x] = y
            inv[y] = x
        return cls(inv)

    @classmethod
    def standard(cls, n: int) -> "HSet":
        return cls.from_pairs((-i, i) for i in range(1, n + 1))

    @classmethod
    def signed(cls, values: Iterable[int]) -> "HSet":
        """``±S`` with the natural involution, for a set ``S`` of positive integers."""
        return cls.from_pairs((-abs(v), abs(v)) for v in values)

    def __len__(self) -> int:
        return len(self.elements)

    @property
    def rank(self) -> int:
        return len(self.pairs)

    def involution(self, x: int) -> int:
        for a, b in self.pairs:
            if x == a:
                return b
            if x == b:
                return a
        raise KeyError(x)

    def quotient(self) -> Tuple[int, ...]:
        """Representatives ``max(i, σ(i))`` in increasing order."""
        return tuple(sorted(b for _, b in self.pairs))

    def ordered(self) -> Tuple[int, ...]:
        """The induced total order ``σ(i_n) < ... < σ(i_1) < i_1 < ... < i_n``."""
        reps = self.quotient()
        lower = {b: a for a, b in self.pairs}
        return tuple(lower[r] for r in reversed(reps)) + reps


def standardize(h: HSet) -> Dict[int, int]:
    """The order-preserving H-bijection ``h -> [±n]``."""
    st: Dict[int, int] = {}
    lower = {b: a for a, b in h.pairs}
    for k, rep in enumerate(h.quotient(), start=1):
        st[rep] = k
        st[lower[rep]] = -k
    return st


def canonical_map(h1: HSet, h2: HSet) -> Dict[int, int]:
    if h1.rank != h2.rank:
        raise ValueError(f"H-sets have different sizes: {len(h1)} != {len(h2)}")
    st1 = standardize(h1)
    st2_inv = {v: k for k, v in standardize(h2).items()}
    return {x: st2_inv[st1[x]] for x in h1.elements}


def standardize_values(values: Iterable[int]) -> Dict[int, int]:
    """Standardization of ``±S`` restricted to the signed values occurring."""
    values = list(values)
    ranks = {a: k for k, a in enumerate(sorted({abs(v) for v in values}), start=1)}
    return {v: (ranks[abs(v)] if v > 0 else -ranks[abs(v)]) for v in values}


def shift_values(values: Iterable[int], offset: int) -> Dict[int, int]:
    """``can`` from ``[±t]`` onto ``[±(s+t)] \\ [±s]``."""
    return {v: v + offset if v > 0 else v - offset for v in values}


# ---------------------------------------------------------------------------
# Section maps and signed permutations
# ---------------------------------------------------------------------------


@dataclass(frozen=True, order=True)
class SectionMap:
    signs: Tuple[int, ...]

    def __post_init__(self):
        if any(s not in (1, -1) for s in self.signs):
            raise ValueError(f"signs must be +1 or -1, got {self.signs}")

    @property
    def degree(self) -> int:
        return len(self.signs)

    @property
    def images(self) -> Tuple[int, ...]:
        return tuple(s * i for i, s in enumerate(self.signs, start=1))

    @classmethod
    def from_images(cls, images: Sequence[int]) -> "SectionMap":
        for i, x in enumerate(images, start=1):
            if abs(x) != i:
                raise ValueError(f"entry {i} of a section must be ±{i}, got {x}")
        return cls(tuple(1 if x > 0 else -1 for x in images))

    @property
    def negatives(self) -> int:
        return sum(1 for s in self.signs if s < 0)

    def __str__(self) -> str:
        return "(" + ",".join(str(x) for x in self.images) + ")"


def parse_section(text: str) -> SectionMap:
    body = text.strip()
    if not (body.startswith("(") and body.endswith(")")):
        raise ValueError(f"section map must be parenthesized: {text!r}")
    body = body[1:-1].strip()
    if not body:
        return SectionMap(())
    return SectionMap.from_images([int(tok) for tok in body.split(",")])


def enumerate_sections(n: int) -> Tuple[SectionMap, ...]:
    """All ``2**n`` sections of ``[±n]``; the first coordinate varies fastest."""
    if n < 0:
        raise ValueError("degree must be nonnegative")
    return tuple(
        SectionMap(tuple(reversed(signs))) for signs in itertools.product((1, -1), repeat=n)
    )


@dataclass(frozen=True, order=True)
class SignedPermutation:
    images: Tuple[int, ...]

    def __post_init__(self):
        if sorted(abs(x) for x in self.images) != list(range(1, len(self.images) + 1)):
            raise ValueError(f"not a signed permutation: {self.images}")

    @property
    def degree(self) -> int:
        return len(self.images)

    @classmethod
    def identity(cls, n: int) -> "SignedPermutation":
        return cls(tuple(range(1, n + 1)))

    def __call__(self, x: int) -> int:
        y = self.images[abs(x) - 1]
        return y if x > 0 else -y

    def __mul__(self, other: "SignedPermutation") -> "SignedPermutation":
        # (w * v)(i) = w(v(i))
        if self.degree != other.degree:
            raise ValueError("degree mismatch")
        return SignedPermutation(tuple(self(other(i)) for i in range(1, self.degree + 1)))

    def inverse(self) -> "SignedPermutation":
        inv = [0] * self.degree
        for i, y in enumerate(self.images, start=1):
            inv[abs(y) - 1] = i if y > 0 else -i
        return SignedPermutation(tuple(inv))

    def __str__(self) -> str:
        return " ".join(str(x) for x in self.images)


def generators(n: int) -> Tuple[SignedPermutation, ...]:
    """``s_0 = 1̄2...n`` and the adjacent transpositions ``s_1, ..., s_{n-1}``."""
    if n == 0:
        return ()
    gens = [SignedPermutation((-1,) + tuple(range(2, n + 1)))]
    for i in range(1, n):
        images = list(range(1, n + 1))
        images[i - 1], images[i] = images[i], images[i - 1]
        gens.append(SignedPermutation(tuple(images)))
    return tuple(gens)


def enumerate_signed_permutations(n: int) -> Tuple[SignedPermutation, ...]:
    if n < 0:
        raise ValueError("degree must be nonnegative")
    out = []
    for perm in itertools.permutations(range(1, n + 1)):
        for signs in itertools.product((1, -1), repeat=n):
            out.append(SignedPermutation(tuple(s * p for s, p in zip(signs, perm))))
    return tuple(sorted(out))


def generated_group(gens: Sequence[SignedPermutation], n: int) -> FrozenSet[SignedPermutation]:
    """Closure of ``gens`` under composition (breadth-first)."""
    identity = SignedPermutation.identity(n)
    seen = {identity}
    frontier = [identity]
    while frontier:
        nxt = []
        for w in frontier:
            for g in gens:
                v = g * w
                if v not in seen:
                    seen.add(v)
                    nxt.append(v)
        frontier = nxt
    return frozenset(seen)


def permutation(images: Sequence[int]) -> SignedPermutation:
    """A plain permutation of ``[n]`` viewed inside ``B_n``."""
    if any(x <= 0 for x in images):
        raise ValueError("plain permutations have positive images")
    return SignedPermutation(tuple(images))


# ---------------------------------------------------------------------------
# Set compositions
# ---------------------------------------------------------------------------


@dataclass(frozen=True, repr=False, eq=False)
class SetComposition:
    blocks: Tuple[FrozenSet[int], ...]

    def __init__(self, blocks: Iterable[Iterable[int]] = ()):
        frozen = tuple(frozenset(b) for b in blocks)
        seen: set = set()
        for b in frozen:
            if not b:
                raise ValueError("set compositions have no empty blocks")
            if seen & b:
                raise ValueError(f"blocks overlap on {sorted(seen & b)}")
            seen |= b
        object.__setattr__(self, "blocks", frozen)

    @property
    def ground(self) -> FrozenSet[int]:
        return frozenset().union(*self.blocks)

    def __len__(self) -> int:
        return len(self.blocks)

    def __iter__(self) -> Iterator[FrozenSet[int]]:
        return iter(self.blocks)

    def sort_key(self) -> Tuple:
        return tuple(tuple(sorted((element_key(x) for x in b))) for b in self.blocks)

    def format(self, unicode: bool = False) -> str:
        if not self.blocks:
            return "()"
        return "|".join(
            " ".join(format_element(x, unicode) for x in sorted(b, key=element_key)) for b in self.blocks
        )

    def __str__(self) -> str:
        return self.format()

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self.format()!r})"

    # identity is the block sequence, whatever the subclass
    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SetComposition):
            return NotImplemented
        return self.blocks == other.blocks

    def __hash__(self) -> int:
        return hash(self.blocks)

    def relabel(self, mapping: Mapping[int, int] | Callable[[int], int]) -> "SetComposition":
        f = mapping if callable(mapping) else mapping.__getitem__
        return SetComposition([f(x) for x in b] for b in self.blocks)


@dataclass(frozen=True, init=False, repr=False, eq=False)
class SignedSetComposition(SetComposition):
    """A set composition of ``s([n])`` for a section ``s``."""

    def __init__(self, blocks: Iterable[Iterable[int]] = ()):
        super().__init__(blocks)
        values = sorted(abs(x) for b in self.blocks for x in b)
        if values != list(range(1, len(values) + 1)):
            raise ValueError(f"absolute values must be exactly 1..n, got {values}")

    @property
    def degree(self) -> int:
        return sum(len(b) for b in self.blocks)

    @property
    def section(self) -> SectionMap:
        return SectionMap.from_images(sorted(self.ground, key=abs))


def parse_composition(text: str, cls=SetComposition):
    body = text.strip()
    if body in ("", "()"):
        return cls(())
    blocks = []
    for chunk in body.split("|"):
        toks = chunk.split()
        if not toks:
            raise ValueError(f"empty block in {text!r}")
        blocks.append([int(t) for t in toks])
    return cls(blocks)


def parse_signed_composition(text: str) -> SignedSetComposition:
    return parse_composition(text, SignedSetComposition)


def restrict(F: SetComposition, S: Iterable[int]) -> SetComposition:
    S = frozenset(S)
    return SetComposition(b & S for b in F.blocks if b & S)


def concat(F: SetComposition, G: SetComposition) -> SetComposition:
    if F.ground & G.ground:
        raise ValueError("concatenation needs disjoint ground sets")
    return SetComposition(F.blocks + G.blocks)


def shuffle_sequences(u: Sequence[T], v: Sequence[T]) -> Iterator[Tuple[T, ...]]:
    """All interleavings of ``u`` and ``v`` keeping both orders."""
    if not u:
        yield tuple(v)
        return
    if not v:
        yield tuple(u)
        return
    for w in shuffle_sequences(u[1:], v):
        yield (u[0],) + w
    for w in shuffle_sequences(u, v[1:]):
        yield (v[0],) + w


def quasishuffle_sequences(
    u: Sequence[T], v: Sequence[T], merge: Callable[[T, T], T]
) -> Iterator[Tuple[T, ...]]:
    """Shuffles of ``u`` and ``v`` where an adjacent pair ``u_i, v_j`` may fuse into ``merge(u_i, v_j)``."""
    if not u:
        yield tuple(v)
        return
    if not v:
        yield tuple(u)
        return
    for w in quasishuffle_sequences(u[1:], v, merge):
        yield (u[0],) + w
    for w in quasishuffle_sequences(u, v[1:], merge):
        yield (v[0],) + w
    for w in quasishuffle_sequences(u[1:], v[1:], merge):
        yield (merge(u[0], v[0]),) + w


def _check_disjoint(F: SetComposition, G: SetComposition) -> None:
    if F.ground & G.ground:
        raise ValueError("shuffles need disjoint ground sets")


def shuffle(F: SetComposition, G: SetComposition) -> Tuple[SetComposition, ...]:
    _check_disjoint(F, G)
    out = {SetComposition(w) for w in shuffle_sequences(F.blocks, G.blocks)}
    return tuple(sorted(out, key=SetComposition.sort_key))


def quasishuffle(F: SetComposition, G: SetComposition) -> Tuple[SetComposition, ...]:
    _check_disjoint(F, G)
    out = {SetComposition(w) for w in quasishuffle_sequences(F.blocks, G.blocks, frozenset.union)}
    return tuple(sorted(out, key=SetComposition.sort_key))


def set_compositions(ground: Iterable[int]) -> Iterator[Tuple[FrozenSet[int], ...]]:
    """Ordered set partitions of ``ground`` as tuples of blocks."""
    ground = tuple(sorted(ground, key=element_key))
    if not ground:
        yield ()
        return
    for k in range(1, len(ground) + 1):
        for first in itertools.combinations(ground, k):
            rest = [x for x in ground if x not in first]
            for tail in set_compositions(rest):
                yield (frozenset(first),) + tail


def enumerate_set_compositions(ground: Iterable[int]) -> Tuple[SetComposition, ...]:
    return tuple(sorted((SetComposition(c) for c in set_compositions(ground)), key=SetComposition.sort_key))


def enumerate_signed_set_compositions(n: int) -> Tuple[SignedSetComposition, ...]:
    out = []
    for s in enumerate_sections(n):
        out.extend(SignedSetComposition(c) for c in set_compositions(s.images))
    return tuple(sorted(out, key=SetComposition.sort_key))


def act(w: SignedPermutation, x: SetComposition) -> SetComposition:
    """``j -> sign(j) * w(|j|)`` applied blockwise."""
    if isinstance(x, SignedSetComposition):
        if w.degree != x.degree:
            raise ValueError(f"degree mismatch: {w.degree} != {x.degree}")
        return SignedSetComposition(x.relabel(w).blocks)
    return x.relabel(w)


def standardize_composition(x: SetComposition) -> SignedSetComposition:
    st = standardize_values(x.ground)
    return SignedSetComposition([st[v] for v in b] for b in x.blocks)


# ---------------------------------------------------------------------------
# H-set compositions
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class HSetComposition:
    """Ordered σ-stable blocks covering an H-set."""

    blocks: Tuple[FrozenSet[int], ...]
    hset: HSet

    def __post_init__(self):
        seen: set = set()
        for b in self.blocks:
            if not b:
                raise ValueError("empty block")
            if seen & b:
                raise ValueError("blocks overlap")
            if any(self.hset.involution(x) not in b for x in b):
                raise ValueError(f"block {sorted(b)} is not stable under the involution")
            seen |= b
        if seen != set(self.hset.elements):
            raise ValueError("blocks must cover the H-set")

    def __str__(self) -> str:
        if not self.blocks:
            return "()"
        return "|".join("{" + ",".join(str(x) for x in sorted(b)) + "}" for b in self.blocks)


def enumerate_hset_compositions(n: int) -> Tuple[HSetComposition, ...]:
    """σ-stable compositions of ``[±n]``, in bijection with set compositions of ``[n]``."""
    h = HSet.standard(n)
    out = []
    for comp in set_compositions(range(1, n + 1)):
        out.append(HSetComposition(tuple(b | frozenset(-x for x in b) for b in comp), h))
    return tuple(out)


def decompositions(n: int) -> Iterator[Tuple[FrozenSet[int], FrozenSet[int]]]:
    """All ``S|T`` with ``S ⊔ T = [n]`` (empty parts allowed); σ-stable pieces are ``±S``, ``±T``."""
    full = range(1, n + 1)
    for k in range(n + 1):
        for S in itertools.combinations(full, k):
            S = frozenset(S)
            yield S, frozenset(full) - S
