"""Sign vectors over {+, 0, -} and deduplicated sets of them.

A sign vector of length n is stored as two bitmasks (positive part,
negative part) with bit i standing for ground element i+1, so composition,
separators and orthogonality tests are word-parallel.  Ground elements are
1-based in every index set this module returns, matching the usual
combinatorics convention; only raw entry sequences are 0-indexed.

Text form: one character per entry, '+', '-' or '0', no separators.
"""

from __future__ import annotations

from typing import Iterable, Iterator

from .errors import DimensionMismatchError, FormatError

_CHARS = {"+", "-", "0"}


class SignVector:
    """Immutable element of {+, 0, -}^n."""

    __slots__ = ("length", "pos", "neg")

    def __init__(self, length: int, pos: int, neg: int):
        if length < 0:
            raise ValueError("length must be nonnegative")
        full = (1 << length) - 1
        if pos & ~full or neg & ~full:
            raise ValueError("mask exceeds vector length")
        if pos & neg:
            raise ValueError("an entry cannot be both + and -")
        object.__setattr__(self, "length", length)
        object.__setattr__(self, "pos", pos)
        object.__setattr__(self, "neg", neg)

    def __setattr__(self, name, value):
        raise AttributeError("SignVector is immutable")

    @classmethod
    def from_string(cls, text: str) -> "SignVector":
        pos = neg = 0
        for i, c in enumerate(text):
            if c == "+":
                pos |= 1 << i
            elif c == "-":
                neg |= 1 << i
            elif c != "0":
                raise FormatError(f"invalid sign character {c!r} at position {i + 1}")
        return cls(len(text), pos, neg)

    @classmethod
    def from_signs(cls, signs: Iterable[int]) -> "SignVector":
        """Build from an iterable of {-1, 0, +1} (any numeric sign works)."""
        pos = neg = 0
        n = 0
        for i, s in enumerate(signs):
            if s > 0:
                pos |= 1 << i
            elif s < 0:
                neg |= 1 << i
            n = i + 1
        return cls(n, pos, neg)

    # -- basic structure ---------------------------------------------------

    @property
    def support_mask(self) -> int:
        return self.pos | self.neg

    def support(self) -> frozenset[int]:
        """1-based indices of nonzero entries."""
        return _mask_to_set(self.support_mask)

    def positive_part(self) -> frozenset[int]:
        return _mask_to_set(self.pos)

    def negative_part(self) -> frozenset[int]:
        return _mask_to_set(self.neg)

    def is_zero_free(self) -> bool:
        return self.support_mask == (1 << self.length) - 1

    def sign(self, element: int) -> int:
        """Sign at 1-based ground element ∈ {-1, 0, +1}."""
        if not 1 <= element <= self.length:
            raise IndexError(f"element {element} outside ground set [1..{self.length}]")
        bit = 1 << (element - 1)
        return 1 if self.pos & bit else -1 if self.neg & bit else 0

    # -- algebra -----------------------------------------------------------

    def __neg__(self) -> "SignVector":
        return SignVector(self.length, self.neg, self.pos)

    def compose(self, other: "SignVector") -> "SignVector":
        """Componentwise composition: self wins wherever it is nonzero."""
        _check_lengths(self, other)
        free = ~self.support_mask
        return SignVector(
            self.length, self.pos | (other.pos & free), self.neg | (other.neg & free)
        )

    def separator_mask(self, other: "SignVector") -> int:
        _check_lengths(self, other)
        return (self.pos & other.neg) | (self.neg & other.pos)

    def separator(self, other: "SignVector") -> frozenset[int]:
        """1-based indices where the two vectors strictly oppose."""
        return _mask_to_set(self.separator_mask(other))

    def orthogonal(self, other: "SignVector") -> bool:
        """True iff supports are disjoint, or the vectors both agree and
        oppose somewhere on the common support."""
        _check_lengths(self, other)
        if not self.support_mask & other.support_mask:
            return True
        agree = (self.pos & other.pos) | (self.neg & other.neg)
        return bool(agree) and bool(self.separator_mask(other))

    def restrict_mask(self, mask: int) -> tuple[int, int]:
        """(pos, neg) masked to the given element bitmask."""
        return (self.pos & mask, self.neg & mask)

    # -- plumbing ----------------------------------------------------------

    def sort_key(self) -> tuple[int, int]:
        """Canonical order used everywhere: lexicographic on (pos, neg)."""
        return (self.pos, self.neg)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, SignVector)
            and self.length == other.length
            and self.pos == other.pos
            and self.neg == other.neg
        )

    def __hash__(self) -> int:
        return hash((self.length, self.pos, self.neg))

    def __lt__(self, other: "SignVector") -> bool:
        return self.sort_key() < other.sort_key()

    def __str__(self) -> str:
        return "".join(
            "+" if self.pos >> i & 1 else "-" if self.neg >> i & 1 else "0"
            for i in range(self.length)
        )

    def __repr__(self) -> str:
        return f"SignVector.from_string({str(self)!r})"

    def __len__(self) -> int:
        return self.length


def compose(x: SignVector, y: SignVector) -> SignVector:
    return x.compose(y)


def separator(x: SignVector, y: SignVector) -> frozenset[int]:
    return x.separator(y)


def orthogonal(x: SignVector, y: SignVector) -> bool:
    return x.orthogonal(y)


def negate(x: SignVector) -> SignVector:
    return -x


def _check_lengths(x: SignVector, y: SignVector) -> None:
    if x.length != y.length:
        raise DimensionMismatchError(
            f"sign vectors of length {x.length} and {y.length} do not match"
        )


def _mask_to_set(mask: int) -> frozenset[int]:
    out = []
    while mask:
        bit = mask & -mask
        out.append(bit.bit_length())
        mask ^= bit
    return frozenset(out)


class SignVectorSet:
    """Deduplicated, immutable collection of sign vectors on a fixed ground set.

    Iteration order is canonical (lexicographic on (pos, neg) masks), so
    serialized output is deterministic.
    """

    __slots__ = ("ground_size", "_members", "_index")

    def __init__(
        self,
        ground_size: int,
        members: Iterable[SignVector] = (),
        negation_closed: bool | None = None,
    ):
        seen = set()
        for v in members:
            if v.length != ground_size:
                raise DimensionMismatchError(
                    f"vector {v} has length {v.length}, ground set has size {ground_size}"
                )
            seen.add(v)
        object.__setattr__(self, "ground_size", ground_size)
        object.__setattr__(self, "_members", tuple(sorted(seen, key=SignVector.sort_key)))
        object.__setattr__(self, "_index", frozenset(seen))
        if negation_closed and not self.is_negation_closed():
            raise ValueError("set declared negation-closed but is not")

    def __setattr__(self, name, value):
        raise AttributeError("SignVectorSet is immutable")

    @classmethod
    def from_strings(cls, strings: Iterable[str], ground_size: int | None = None):
        vecs = [SignVector.from_string(s) for s in strings]
        if ground_size is None:
            if not vecs:
                raise ValueError("ground_size required for an empty set")
            ground_size = vecs[0].length
        return cls(ground_size, vecs)

    def __iter__(self) -> Iterator[SignVector]:
        return iter(self._members)

    def __len__(self) -> int:
        return len(self._members)

    def __contains__(self, v: SignVector) -> bool:
        return v in self._index

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, SignVectorSet)
            and self.ground_size == other.ground_size
            and self._members == other._members
        )

    def __hash__(self) -> int:
        return hash((self.ground_size, self._members))

    def __repr__(self) -> str:
        return f"SignVectorSet({self.ground_size}, {[str(v) for v in self._members]})"

    def union(self, other: "SignVectorSet") -> "SignVectorSet":
        if other.ground_size != self.ground_size:
            raise DimensionMismatchError("ground sizes differ")
        return SignVectorSet(self.ground_size, (*self._members, *other._members))

    def with_members(self, extra: Iterable[SignVector]) -> "SignVectorSet":
        return SignVectorSet(self.ground_size, (*self._members, *extra))

    def is_negation_closed(self) -> bool:
        return all(-v in self._index for v in self._members)

    def is_zero_free(self) -> bool:
        return all(v.is_zero_free() for v in self._members)

    def strings(self) -> list[str]:
        return [str(v) for v in self._members]


# -- sign-vector file format ----------------------------------------------
# UTF-8 text, one vector per line in '+ - 0' form; blank lines and lines
# starting with '#' are ignored; all vectors must share one length.


def parse_sign_file(text: str) -> SignVectorSet:
    vecs = []
    length = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if not set(line) <= _CHARS:
            bad = next(c for c in line if c not in _CHARS)
            raise FormatError(f"line {lineno}: invalid sign character {bad!r}")
        if length is None:
            length = len(line)
        elif len(line) != length:
            raise FormatError(
                f"line {lineno}: vector length {len(line)} differs from {length}"
            )
        vecs.append(SignVector.from_string(line))
    if length is None:
        raise FormatError("no sign vectors found")
    return SignVectorSet(length, vecs)


def format_sign_file(vectors: SignVectorSet) -> str:
    return "\n".join(vectors.strings()) + "\n"
