"""
Root data of small rank, Weyl groups and the rescaled datum at a root of unity.

Conventions
-----------
Nodes are indexed ``0, ..., n-1``.  The Cartan matrix entry
``cartan[i][j]`` is <alpha_j, alpha_i^vee>.  Lattices are
simply connected: a weight is the tuple of its coordinates
``(<lambda, alpha_i^vee>)_i`` in the basis of fundamental weights, and a
coweight ``y`` in Y = Q^vee is the tuple of its coordinates in the basis of
simple coroots, so ``pair(lam, y) = sum(lam[i] * y[i])``.

Roots are recorded in simple-root coordinates and coroots in
simple-coroot coordinates.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from math import gcd
from typing import Iterable, Sequence

__all__ = [
    "RootDatum",
    "WeylElement",
    "SharpDatum",
    "build_root_datum",
    "weyl_group",
    "bipartition_J",
    "sharp_datum",
    "SUPPORTED_TYPES",
]

Weight = tuple[int, ...]

SUPPORTED_TYPES = ("A1", "A1xA1", "A2", "B2")
_EXPERIMENTAL_TYPES = ("A3", "G2")

_TABLES: dict[str, tuple[tuple[tuple[int, ...], ...], tuple[int, ...]]] = {
    "A1": (((2,),), (1,)),
    "A1xA1": (((2, 0), (0, 2)), (1, 1)),
    "A2": (((2, -1), (-1, 2)), (1, 1)),
    # node 0 short, node 1 long
    "B2": (((2, -2), (-1, 2)), (1, 2)),
    "A3": (((2, -1, 0), (-1, 2, -1), (0, -1, 2)), (1, 1, 1)),
    "G2": (((2, -3), (-1, 2)), (1, 3)),
}


@dataclass(frozen=True)
class WeylElement:
    """A Weyl group element with a fixed reduced word.

    ``matrix[i][j]`` is the i-th coordinate of ``w(varpi_j)``.
    """

    word: tuple[int, ...]
    matrix: tuple[tuple[int, ...], ...]

    @property
    def length(self) -> int:
        return len(self.word)

    def act(self, lam: Sequence[int]) -> Weight:
        return tuple(sum(row[j] * lam[j] for j in range(len(lam))) for row in self.matrix)

    def word_str(self) -> str:
        """Reduced word with 1-based node labels, e.g. ``"s1 s2 s1"``."""
        return " ".join(f"s{i + 1}" for i in self.word) if self.word else "e"


@dataclass(frozen=True)
class RootDatum:
    """A finite-type root datum with simply connected weight lattice.

    INPUT:

    - ``type_label`` -- a name such as ``"A2"``.
    - ``cartan`` -- the Cartan matrix, ``cartan[i][j] = <alpha_j, alpha_i^vee>``.
    - ``d`` -- symmetrizing integers ``d_i = (alpha_i, alpha_i)/2``.

    EXAMPLES::

        >>> R = build_root_datum("A2")
        >>> R.reflect(0, (1, 0))
        (-1, 1)
        >>> len(R.positive_roots)
        3
    """

    type_label: str
    cartan: tuple[tuple[int, ...], ...]
    d: tuple[int, ...]
    _cache: dict = field(default_factory=dict, compare=False, hash=False, repr=False)

    def __post_init__(self):
        n = len(self.cartan)
        if any(len(row) != n for row in self.cartan) or len(self.d) != n:
            raise ValueError("Cartan matrix and d must have matching size")
        for i in range(n):
            if self.cartan[i][i] != 2:
                raise ValueError("diagonal Cartan entries must be 2")
            for j in range(n):
                if self.d[i] * self.cartan[i][j] != self.d[j] * self.cartan[j][i]:
                    raise ValueError("d does not symmetrize the Cartan matrix")

    # -- basic lattice operations -----------------------------------------
    @property
    def rank(self) -> int:
        return len(self.cartan)

    @property
    def nodes(self) -> range:
        return range(self.rank)

    @property
    def key(self) -> tuple:
        return (self.type_label, self.cartan, self.d)

    def zero(self) -> Weight:
        return (0,) * self.rank

    def fundamental_weight(self, i: int) -> Weight:
        return tuple(1 if k == i else 0 for k in self.nodes)

    def simple_root(self, j: int) -> Weight:
        """alpha_j in fundamental-weight coordinates (column j of the Cartan matrix)."""
        return tuple(self.cartan[i][j] for i in self.nodes)

    def simple_coroot(self, i: int) -> Weight:
        return self.fundamental_weight(i)

    def pair(self, lam: Sequence[int], y: Sequence[int]) -> int:
        """<lam, y> for ``y`` in simple-coroot coordinates."""
        return sum(a * b for a, b in zip(lam, y))

    def add(self, lam: Sequence[int], mu: Sequence[int], k: int = 1) -> Weight:
        """lam + k*mu."""
        return tuple(a + k * b for a, b in zip(lam, mu))

    def shift(self, lam: Sequence[int], i: int, n: int) -> Weight:
        """lam + n*alpha_i."""
        return tuple(lam[k] + n * self.cartan[k][i] for k in self.nodes)

    def reflect(self, i: int, lam: Sequence[int]) -> Weight:
        """s_i(lam) = lam - <lam, alpha_i^vee> alpha_i."""
        return self.shift(lam, i, -lam[i])

    def act(self, w: "WeylElement | Iterable[int]", lam: Sequence[int]) -> Weight:
        """Apply ``w`` (an element or a word read right to left) to ``lam``."""
        if isinstance(w, WeylElement):
            return w.act(lam)
        out = tuple(lam)
        for i in reversed(tuple(w)):
            out = self.reflect(i, out)
        return out

    def is_dominant(self, lam: Sequence[int]) -> bool:
        return all(x >= 0 for x in lam)

    def to_root_coords(self, gamma: Sequence[int]) -> tuple[Fraction, ...]:
        """Coordinates of ``gamma`` (a weight) in the basis of simple roots."""
        inv = self._cartan_inverse
        return tuple(sum(inv[j][i] * gamma[i] for i in self.nodes) for j in self.nodes)

    def height(self, gamma: Sequence[int]) -> int:
        """Height of ``gamma`` in Q^+ (sum of simple-root coefficients)."""
        c = self.to_root_coords(gamma)
        if any(x.denominator != 1 or x < 0 for x in c):
            raise ValueError(f"{tuple(gamma)} is not in Q^+")
        return int(sum(c))

    def in_root_cone(self, gamma: Sequence[int]) -> bool:
        """True if ``gamma`` lies in Q^+."""
        c = self.to_root_coords(gamma)
        return all(x.denominator == 1 and x >= 0 for x in c)

    def weight_height(self, lam: Sequence[int]) -> int:
        """Sum of fundamental-weight coordinates, used to size test grids."""
        return sum(lam)

    @cached_property
    def _cartan_inverse(self) -> tuple[tuple[Fraction, ...], ...]:
        n = self.rank
        m = [[Fraction(self.cartan[i][j]) for j in range(n)] + [Fraction(int(i == k)) for k in range(n)]
             for i in range(n)]
        for c in range(n):
            p = next(r for r in range(c, n) if m[r][c] != 0)
            m[c], m[p] = m[p], m[c]
            piv = m[c][c]
            m[c] = [x / piv for x in m[c]]
            for r in range(n):
                if r != c and m[r][c] != 0:
                    f = m[r][c]
                    m[r] = [x - f * y for x, y in zip(m[r], m[c])]
        return tuple(tuple(row[n:]) for row in m)

    # -- roots ----------------------------------------------------------
    @cached_property
    def _root_pairs(self) -> tuple[tuple[tuple[int, ...], tuple[int, ...]], ...]:
        n = self.rank
        unit = [tuple(int(i == k) for k in range(n)) for i in range(n)]
        seen = {}
        queue = deque((unit[i], unit[i]) for i in range(n))
        while queue:
            root, coroot = queue.popleft()
            if root in seen:
                continue
            seen[root] = coroot
            for i in range(n):
                # s_i(alpha) = alpha - <alpha, alpha_i^vee> alpha_i
                pa = sum(root[j] * self.cartan[i][j] for j in range(n))
                new_root = tuple(root[k] - (pa if k == i else 0) for k in range(n))
                # s_i(alpha^vee) = alpha^vee - <alpha_i, alpha^vee> alpha_i^vee
                pc = sum(coroot[j] * self.cartan[j][i] for j in range(n))
                new_coroot = tuple(coroot[k] - (pc if k == i else 0) for k in range(n))
                if new_root not in seen:
                    queue.append((new_root, new_coroot))
        return tuple(sorted(((r, c) for r, c in seen.items() if all(x >= 0 for x in r)),
                            key=lambda rc: (sum(rc[0]), rc[0])))

    @property
    def positive_roots(self) -> tuple[tuple[int, ...], ...]:
        """Positive roots in simple-root coordinates, by height."""
        return tuple(r for r, _ in self._root_pairs)

    @property
    def positive_coroots(self) -> tuple[tuple[int, ...], ...]:
        """The coroot of each positive root, in simple-coroot coordinates."""
        return tuple(c for _, c in self._root_pairs)

    def root_d(self, root: Sequence[int]) -> int:
        """d_alpha = (alpha, alpha)/2 for a root in simple-root coordinates."""
        n = self.rank
        s = sum(root[i] * root[j] * self.d[i] * self.cartan[i][j] for i in range(n) for j in range(n))
        assert s % 2 == 0
        return s // 2

    def root_as_weight(self, root: Sequence[int]) -> Weight:
        out = self.zero()
        for j, c in enumerate(root):
            out = self.shift(out, j, c)
        return out

    def weyl_dimension(self, lam: Sequence[int]) -> int:
        """Weyl dimension formula: product of <lam+rho, a^vee>/<rho, a^vee>."""
        num, den = 1, 1
        for cor in self.positive_coroots:
            num *= sum(c * (x + 1) for c, x in zip(cor, lam))
            den *= sum(cor)
        assert num % den == 0
        return num // den

    # -- Weyl group -----------------------------------------------------
    def weyl_group(self) -> list[WeylElement]:
        return weyl_group(self)

    def longest_element(self) -> WeylElement:
        return max(self.weyl_group(), key=lambda w: w.length)

    def reflection_matrix(self, i: int) -> tuple[tuple[int, ...], ...]:
        n = self.rank
        cols = [self.reflect(i, self.fundamental_weight(j)) for j in range(n)]
        return tuple(tuple(cols[j][k] for j in range(n)) for k in range(n))

    def element(self, word: Sequence[int]) -> WeylElement:
        """The element with the given word; rejects non-reduced words."""
        word = tuple(word)
        mat = _identity(self.rank)
        for i in word:
            mat = _matmul(mat, self.reflection_matrix(i))
        w = WeylElement(word, mat)
        if self.inversions(w) != len(word):
            raise ValueError(f"word {word} is not reduced")
        return w

    def inversions(self, w: WeylElement) -> int:
        """#{alpha > 0 : w(alpha) < 0}."""
        count = 0
        for root in self.positive_roots:
            image = w.act(self.root_as_weight(root))
            coords = self.to_root_coords(image)
            if all(c <= 0 for c in coords):
                count += 1
        return count

    def bipartition_J(self) -> frozenset[int]:
        return bipartition_J(self)


def _identity(n: int) -> tuple[tuple[int, ...], ...]:
    return tuple(tuple(int(i == j) for j in range(n)) for i in range(n))


def _matmul(a, b) -> tuple[tuple[int, ...], ...]:
    n = len(a)
    return tuple(tuple(sum(a[i][k] * b[k][j] for k in range(n)) for j in range(n)) for i in range(n))


def build_root_datum(type_label: str, *, scale: int = 1, experimental: bool = False) -> RootDatum:
    """The root datum of the given type with minimally normalized form.

    ``scale`` multiplies the invariant form (only allowed for A1).

    EXAMPLES::

        >>> build_root_datum("B2").d
        (1, 2)
    """
    if type_label not in SUPPORTED_TYPES and not (experimental and type_label in _EXPERIMENTAL_TYPES):
        raise ValueError(f"unsupported root datum type {type_label!r}")
    cartan, d = _TABLES[type_label]
    if scale != 1:
        if type_label != "A1":
            raise ValueError("a rescaled form is only offered for A1")
        d = tuple(scale * x for x in d)
        type_label = f"A1[scale={scale}]"
    return RootDatum(type_label, cartan, d)


def weyl_group(datum: RootDatum) -> list[WeylElement]:
    """All elements of W with one reduced word each, ordered by length.

    Breadth-first search over right multiplication by simple reflections
    yields, for each element, the lexicographically first reduced word
    among those found at its length.

    EXAMPLES::

        >>> [w.word for w in weyl_group(build_root_datum("A2"))]
        [(), (0,), (1,), (0, 1), (1, 0), (0, 1, 0)]
    """
    cached = datum._cache.get("weyl_group")
    if cached is not None:
        return cached
    n = datum.rank
    start = WeylElement((), _identity(n))
    seen = {start.matrix: start}
    frontier = [start]
    while frontier:
        nxt = []
        for w in frontier:
            for i in range(n):
                mat = _matmul(w.matrix, datum.reflection_matrix(i))
                if mat not in seen:
                    el = WeylElement(w.word + (i,), mat)
                    seen[mat] = el
                    nxt.append(el)
        frontier = nxt
    out = sorted(seen.values(), key=lambda w: (w.length, w.word))
    datum._cache["weyl_group"] = out
    return out


def bipartition_J(datum: RootDatum) -> frozenset[int]:
    """Two-colour the Dynkin graph by BFS from the smallest node; return
    the colour class of each component's smallest node.

    EXAMPLES::

        >>> sorted(bipartition_J(build_root_datum("A2")))
        [0]
    """
    n = datum.rank
    colour: dict[int, int] = {}
    for s in range(n):
        if s in colour:
            continue
        colour[s] = 0
        queue = deque([s])
        while queue:
            i = queue.popleft()
            for j in range(n):
                if j != i and datum.cartan[i][j] < 0:
                    if j not in colour:
                        colour[j] = 1 - colour[i]
                        queue.append(j)
                    elif colour[j] == colour[i]:
                        raise ValueError("Dynkin graph is not bipartite")
    return frozenset(i for i in range(n) if colour[i] == 0)


# ---------------------------------------------------------------------------
# the rescaled datum


@dataclass(frozen=True)
class SharpDatum:
    """The datum attached to a root of unity of order ``ell``.

    ``datum`` is the rescaled root datum itself, with simple roots
    ``r_i alpha_i``, simple coroots ``alpha_i^vee / r_i`` and invariant form
    restricted from the original one (so its ``d`` is ``r_i**2 d_i``).
    ``lattice`` is a basis of the sublattice of X it lives on, in original
    fundamental-weight coordinates.
    """

    source: RootDatum
    ell: int
    r: int
    r_nodes: tuple[int, ...]
    datum: RootDatum
    lattice: tuple[Weight, ...]

    def r_root(self, root: Sequence[int]) -> int:
        return self.r // gcd(self.r, self.source.root_d(root))

    def contains(self, lam: Sequence[int]) -> bool:
        """Membership in the sublattice: <lam, alpha^vee / r_alpha> integral for all roots."""
        src = self.source
        for root, cor in zip(src.positive_roots, src.positive_coroots):
            if src.pair(lam, cor) % self.r_root(root):
                return False
        return True

    def to_sharp(self, lam: Sequence[int]) -> Weight:
        """Coordinates of ``lam`` in the fundamental weights of the rescaled datum."""
        if not self.contains(lam):
            raise ValueError(f"{tuple(lam)} is not in the sharp lattice")
        return tuple(x // r for x, r in zip(lam, self.r_nodes))

    def from_sharp(self, lam: Sequence[int]) -> Weight:
        return tuple(x * r for x, r in zip(lam, self.r_nodes))


def _hnf_rows(vectors: list[list[int]]) -> list[list[int]]:
    """Row-style Hermite normal form of the lattice spanned by ``vectors``."""
    rows = [list(v) for v in vectors if any(v)]
    n = len(rows[0]) if rows else 0
    out = []
    col = 0
    while rows and col < n:
        active = [r for r in rows if r[col] != 0]
        if not active:
            col += 1
            continue
        while len(active) > 1:
            active.sort(key=lambda r: abs(r[col]))
            p = active[0]
            for r in active[1:]:
                f = r[col] // p[col]
                for k in range(n):
                    r[k] -= f * p[k]
            active = [p] + [r for r in active[1:] if r[col] != 0]
        p = active[0]
        if p[col] < 0:
            p[:] = [-x for x in p]
        out.append(p)
        rows = [r for r in rows if r is not p and any(r)]
        col += 1
    for i, p in enumerate(out):
        c = next(k for k, x in enumerate(p) if x)
        for prev in out[:i]:
            f = prev[c] // p[c]
            for k in range(n):
                prev[k] -= f * p[k]
    return out


def sharp_datum(datum: RootDatum, ell: int) -> SharpDatum:
    """The rescaled root datum for zeta of order ``ell``.

    EXAMPLES::

        >>> S = sharp_datum(build_root_datum("B2"), 4)
        >>> S.r, S.r_nodes
        (2, (2, 1))
        >>> sharp_datum(build_root_datum("A1"), 3).lattice
        ((3,),)
    """
    if ell < 1:
        raise ValueError("ell must be positive")
    r = ell if ell % 2 else ell // 2
    r_nodes = tuple(r // gcd(r, di) for di in datum.d)
    n = datum.rank
    cartan = []
    for i in range(n):
        row = []
        for j in range(n):
            num = r_nodes[j] * datum.cartan[i][j]
            if num % r_nodes[i]:
                raise ValueError("rescaled Cartan matrix is not integral")
            row.append(num // r_nodes[i])
        cartan.append(tuple(row))
    d = tuple(ri * ri * di for ri, di in zip(r_nodes, datum.d))
    label = datum.type_label if r == 1 else f"{datum.type_label}#{ell}"
    sharp = RootDatum(label, tuple(cartan), d)

    # kernel of the congruences <lam, alpha^vee> = 0 mod r_alpha, via HNF
    mods = []
    for root, cor in zip(datum.positive_roots, datum.positive_coroots):
        mods.append((cor, r // gcd(r, datum.root_d(root))))
    big = 1
    for _, m in mods:
        big = big * m // gcd(big, m)
    gens = [[big if k == i else 0 for k in range(n)] for i in range(n)]
    for v in _box(n, big):
        if all(sum(c * x for c, x in zip(cor, v)) % m == 0 for cor, m in mods):
            gens.append(list(v))
    lattice = tuple(tuple(row) for row in _hnf_rows(gens))
    out = SharpDatum(datum, ell, r, r_nodes, sharp, lattice)
    expected = tuple(tuple(r_nodes[i] if k == i else 0 for k in range(n)) for i in range(n))
    if lattice != expected:
        raise ValueError("rescaled lattice is not spanned by r_i varpi_i; unsupported")
    return out


def _box(n: int, m: int):
    if n == 0:
        yield ()
        return
    for head in range(m):
        for tail in _box(n - 1, m):
            yield (head,) + tail
