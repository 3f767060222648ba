"""RO(G)-graded rational stable stems of C_{2^n}, computed three ways.

For G = C_{2^n} the rational G-equivariant stable stem in a virtual
degree V is a finite direct sum of simple Mackey functors M_i^(+-).
This module computes that sum by three independent routes:

* ``stem_at`` decodes the degree into an integer tuple t =
  (j_0..j_{n-1}, j'_0..j'_{n-1}) whose entries split at a cut position
  (restrictions before the cut, order-vanishing after it) and reads the
  answer off the tuple: the summands are M_i for k'(t) < i <= k(t),
  signed by the parity of j_{n-1}.
* ``stem_at_sector`` tests, sector by sector, the lattice membership
  equations of the monomial model of the point: sector i < n occupies
  the degrees with d = -s - 2*(c_i + ... + c_{n-2}), sector n the
  degrees with d = 0; the sign is the parity of the u_sigma exponent.
* ``stem_at_oracle`` computes the Bredon homology of an actual (virtual)
  representation sphere from geometry: each irreducible factor
  contributes one line of Weyl eigenvalue data per subgroup level (the
  dimension and orientation character of its fixed sphere), the lines
  are assembled through ``mackey.classify``, and smash factors combine
  by the degreewise box product.

The module also carries the monomial model itself (``SectorElement``,
``SectorMonomial``), a structured generators-and-relations presentation
of the point (``point_presentation``) and the degree lattices of the
geometric and homotopy fixed-point rings (``fixed_point_rings``).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import product
from typing import Iterable, Mapping

from .mackey import MINUS, PLUS, GradedTable, MackeyClass, classify
from .rolattice import VirtualRep


class TupleAmbiguityError(RuntimeError):
    """The tuple decoder produced two decompositions that overlap.

    Distinct valid tuples for one degree must occupy pairwise disjoint
    sector runs (they then simply add up); an overlap would make the
    decomposition ill-defined and is reported rather than silently
    resolved.
    """


@dataclass(frozen=True)
class StemTuple:
    """A decoded degree: j collects orientation-class exponents, j_prime
    Euler-class exponents, one slot per generator position (position
    n-1 is the sigma slot, positions k <= n-2 the l_k slots).  The
    tuple contributes one simple per sector in the run
    k_prime < i <= k, signed by the parity of the sigma-slot entry."""

    n: int
    j: tuple[int, ...]
    j_prime: tuple[int, ...]

    def k(self) -> int:
        nonzero = [p for p, v in enumerate(self.j) if v != 0]
        return min(nonzero) if nonzero else self.n

    def k_prime(self) -> int:
        nonzero = [p for p, v in enumerate(self.j_prime) if v != 0]
        return max(nonzero) if nonzero else -1

    def sign(self) -> int:
        if self.n >= 1 and self.j[self.n - 1] % 2 != 0:
            return MINUS
        return PLUS

    def run(self) -> range:
        return range(self.k_prime() + 1, self.k() + 1)


def decode_degree(v: VirtualRep) -> tuple[StemTuple, ...]:
    """All valid tuples decomposing the degree v, sorted by sector run.

    Enumerate cut positions: positions below the cut take the
    j'-assignment, positions at or above it the j-assignment, with the
    per-position totals forced by the coordinates of v.  A candidate
    survives when its trivial part matches d; cuts separated only by
    zero totals repeat the same tuple and are merged.

    A degree can decode to more than one tuple (the occupied sectors
    then form several runs separated by gaps, e.g. l0 - 2*sigma at
    n = 2 decodes to u_l0^-1 u_sigma^2 and to a_l0^-1 a_sigma^2, with
    runs {0} and {2}); the runs of distinct tuples are provably
    disjoint, which is asserted here.
    """
    n = v.n
    totals = [-ck for ck in v.c] + ([-v.s] if n >= 1 else [])
    found: dict[tuple[tuple[int, ...], tuple[int, ...]], None] = {}
    for cut in range(n + 1):
        j = [0] * n
        jp = [0] * n
        for p in range(n):
            if p < cut:
                jp[p] = totals[p]
            else:
                j[p] = totals[p]
        d = 2 * sum(j[k] for k in range(n - 1)) + (j[n - 1] if n >= 1 else 0)
        if d == v.d:
            found.setdefault((tuple(j), tuple(jp)))
    tuples = sorted((StemTuple(n, j, jp) for j, jp in found),
                    key=lambda t: (t.k_prime(), t.k()))
    for prev, cur in zip(tuples, tuples[1:]):
        if prev.k() > cur.k_prime():
            raise TupleAmbiguityError(
                f"degree {v}: tuples with overlapping sector runs "
                f"{list(prev.run())} and {list(cur.run())}")
    return tuple(tuples)


def stem_at(v: VirtualRep) -> MackeyClass:
    """The stem at degree v: the sum of the decoded tuples' runs."""
    entries: list[tuple[int, int, int]] = []
    for t in decode_degree(v):
        entries.extend((i, t.sign(), 1) for i in t.run())
    return MackeyClass(v.n, tuple(entries))


def stem_at_sector(v: VirtualRep) -> MackeyClass:
    """The stem at degree v, by sector membership of the monomial model.

    Sector i < n is the Laurent lattice on u_sigma, the u_l_k with
    k >= i and the a_l_k with k < i; its degrees satisfy
    d = -s - 2*(c_i + ... + c_{n-2}).  Sector n is the Laurent lattice
    on a_sigma and all a_l_k, with degrees d = 0.
    """
    n = v.n
    entries: list[tuple[int, int, int]] = []
    for i in range(n):
        if v.d == -v.s - 2 * sum(v.c[i:]):
            # u_sigma carries exponent -s; odd exponent means the sign line
            sign = MINUS if v.s % 2 != 0 else PLUS
            entries.append((i, sign, 1))
    if v.d == 0:
        entries.append((n, PLUS, 1))
    return MackeyClass(n, tuple(entries))


@lru_cache(maxsize=None)
def _irreducible_sphere_table(n: int, kind: str, k: int) -> GradedTable:
    """Homology table of the sphere of one irreducible (sigma or l_k),
    assembled from fixed-point geometry through the classifier."""
    w = VirtualRep.sigma(n) if kind == "sigma" else VirtualRep.lam(n, k)
    lines: dict[int, list[tuple[int, int]]] = {}
    for h in range(n + 1):
        lines.setdefault(w.fixed_dim(h), []).append((h, w.fixed_sign(h)))
    classes = {}
    for degree, hits in lines.items():
        eigen = [[0, 0, 0] for _ in range(n + 1)]
        for h, sign in hits:
            eigen[h][0 if sign == PLUS else 1] += 1
        classes[degree] = classify(n, [tuple(e) for e in eigen])
    return GradedTable.from_dict(n, classes)


@lru_cache(maxsize=None)
def _smash_table(n: int, s: int, c: tuple[int, ...]) -> GradedTable:
    """Homology table of the virtual sphere S^(s*sigma + sum c_k*l_k),
    built one smash factor at a time via the graded box product."""
    if s > 0:
        return _smash_table(n, s - 1, c).box(_irreducible_sphere_table(n, "sigma", -1))
    if s < 0:
        return _smash_table(n, s + 1, c).box(
            _irreducible_sphere_table(n, "sigma", -1).dual())
    for k, ck in enumerate(c):
        if ck == 0:
            continue
        step = list(c)
        step[k] -= 1 if ck > 0 else -1
        table = _irreducible_sphere_table(n, "lam", k)
        if ck < 0:
            table = table.dual()
        return _smash_table(n, s, tuple(step)).box(table)
    return GradedTable.from_dict(n, {0: MackeyClass.burnside_class(n)})


def sphere_homology(v: VirtualRep) -> GradedTable:
    """Reduced Bredon homology of the (virtual) representation sphere S^v,
    as a table of MackeyClasses over integer degrees."""
    return _smash_table(v.n, v.s, v.c).shift(v.d)


def stem_at_oracle(v: VirtualRep) -> MackeyClass:
    """The stem at degree v, read off sphere homology: the stem at
    d + W equals the degree-d homology of the sphere on -W."""
    return _smash_table(v.n, -v.s, tuple(-ck for ck in v.c)).get(v.d)


STEM_METHODS = {
    "closed": stem_at,
    "sector": stem_at_sector,
    "oracle": stem_at_oracle,
}


# ---------------------------------------------------------------------------
# The monomial model of the point ring.

_US = ("us",)
_AS = ("as",)


def _ul(k: int) -> tuple:
    return ("ul", k)


def _al(k: int) -> tuple:
    return ("al", k)


_KEY_NAMES = {"us": "u_sigma", "as": "a_sigma", "ul": "u_l", "al": "a_l"}


def _key_name(key: tuple) -> str:
    base = _KEY_NAMES[key[0]]
    return base + (str(key[1]) if len(key) > 1 else "")


def sector_alphabet(m: int, sector: int) -> tuple[tuple, ...]:
    """Generator alphabet of the given sector at a level with group
    exponent m: sectors below the top mix orientation classes (u) with
    Euler classes (a), the top sector is purely Euler."""
    if not 0 <= sector <= m:
        raise ValueError(f"sector {sector} outside 0..{m}")
    if sector < m:
        keys = [_US]
        keys += [_ul(k) for k in range(sector, m - 1)]
        keys += [_al(k) for k in range(sector)]
    else:
        keys = [_AS]
        keys += [_al(k) for k in range(max(m - 1, 0))]
    return tuple(keys)


@dataclass(frozen=True)
class SectorMonomial:
    """A Laurent monomial in one sector's generator alphabet, at a level
    with group exponent m.  Each sector holds at most one monomial per
    degree, so the exponents are determined by the degree and vice
    versa."""

    m: int
    sector: int
    exponents: tuple[tuple[tuple, int], ...]

    def __post_init__(self) -> None:
        allowed = set(sector_alphabet(self.m, self.sector))
        normal: dict[tuple, int] = {}
        for key, e in self.exponents:
            key = tuple(key)
            if key not in allowed:
                raise ValueError(f"generator {_key_name(key)} not in sector {self.sector} "
                                 f"at exponent-{self.m} level")
            if e:
                normal[key] = normal.get(key, 0) + int(e)
        object.__setattr__(self, "exponents",
                           tuple(sorted((k, e) for k, e in normal.items() if e != 0)))

    def degree(self) -> VirtualRep:
        """|u_sigma| = 1 - sigma, |u_l_k| = 2 - l_k, |a_l_k| = -l_k,
        |a_sigma| = -sigma."""
        d = s = 0
        c = [0] * max(self.m - 1, 0)
        for key, e in self.exponents:
            if key == _US:
                d += e
                s -= e
            elif key == _AS:
                s -= e
            elif key[0] == "ul":
                d += 2 * e
                c[key[1]] -= e
            else:
                c[key[1]] -= e
        return VirtualRep(self.m, d, s, tuple(c))

    @classmethod
    def for_degree(cls, m: int, sector: int, v: VirtualRep) -> "SectorMonomial":
        """The unique sector monomial of the given degree; raises if the
        sector does not occupy that degree."""
        if v.n != m:
            raise ValueError("degree has the wrong ambient exponent")
        if v.fixed_dim(sector) != 0:
            raise ValueError(f"sector {sector} does not occupy degree {v}")
        exps: list[tuple[tuple, int]] = []
        if sector < m:
            exps.append((_US, -v.s))
            for k in range(sector, m - 1):
                exps.append((_ul(k), -v.c[k]))
            for k in range(sector):
                exps.append((_al(k), -v.c[k]))
        else:
            exps.append((_AS, -v.s))
            for k in range(max(m - 1, 0)):
                exps.append((_al(k), -v.c[k]))
        return cls(m, sector, tuple(exps))

    def __str__(self) -> str:
        parts = []
        for key, e in self.exponents:
            parts.append(_key_name(key) + (f"^{e}" if e != 1 else ""))
        return "*".join(parts) if parts else "1"


def _sector_sign(v: VirtualRep, i: int) -> int:
    return MINUS if (i < v.n and v.s % 2 != 0) else PLUS


def _sector_alive(v: VirtualRep, i: int, level: int) -> bool:
    """Whether the sector-i line of degree v has a nonzero value at the
    given level: the degree must lie in the sector's lattice, the level
    must be at or above the sector, and a sign line vanishes at the top."""
    if not 0 <= i <= level:
        return False
    if v.fixed_dim(i) != 0:
        return False
    if _sector_sign(v, i) == MINUS and level == v.n:
        return False
    return True


@dataclass(frozen=True)
class SectorElement:
    """A homogeneous element of the point ring's value at one level.

    The element is a rational combination of per-sector basis lines in a
    single global degree.  Coefficients are taken against the canonical
    transferred generators: the bottom-level generator of each sector
    lattice, pushed up by transfers (transfer is basis-preserving,
    restriction multiplies by 2 per level).  Degree bookkeeping stays
    global; the exponents over the level's own alphabet are recovered
    on demand via restriction.
    """

    level: int
    degree: VirtualRep
    coeffs: tuple[tuple[int, Fraction], ...]

    def __post_init__(self) -> None:
        n = self.degree.n
        if not 0 <= self.level <= n:
            raise ValueError(f"level {self.level} outside 0..{n}")
        merged: dict[int, Fraction] = {}
        for i, q in self.coeffs:
            q = Fraction(q)
            if q == 0:
                continue
            if not _sector_alive(self.degree, i, self.level):
                raise ValueError(f"sector {i} has no line in degree {self.degree} "
                                 f"at level {self.level}")
            merged[i] = merged.get(i, Fraction(0)) + q
        object.__setattr__(self, "coeffs",
                           tuple(sorted((i, q) for i, q in merged.items() if q != 0)))

    @property
    def n(self) -> int:
        return self.degree.n

    @classmethod
    def from_dict(cls, level: int, degree: VirtualRep,
                  coeffs: Mapping[int, Fraction | int]) -> "SectorElement":
        return cls(level, degree, tuple((i, Fraction(q)) for i, q in coeffs.items()))

    # -- canonical classes ---------------------------------------------------

    @classmethod
    def unit(cls, n: int, level: int) -> "SectorElement":
        """The multiplicative unit: the sum of the level's idempotents,
        whose sector-i coordinate is 1/2^(level-i) in the transferred
        basis."""
        return cls.from_dict(level, VirtualRep.zero(n),
                             {i: Fraction(1, 2 ** (level - i)) for i in range(level + 1)})

    @classmethod
    def y_class(cls, n: int, i: int) -> "SectorElement":
        """The idempotent y_i at its own level: the sector-i unit."""
        return cls.from_dict(i, VirtualRep.zero(n), {i: 1})

    @classmethod
    def euler_sigma(cls, n: int) -> "SectorElement":
        """a_sigma, the Euler class of sigma: top level, degree -sigma."""
        return cls.from_dict(n, -VirtualRep.sigma(n), {n: 1})

    @classmethod
    def euler_lambda(cls, n: int, k: int) -> "SectorElement":
        """a_l_k, the Euler class of l_k: top level, degree -l_k."""
        v = -VirtualRep.lam(n, k)
        return cls.from_dict(n, v, {i: Fraction(1, 2 ** (n - i)) for i in range(k + 1, n + 1)})

    @classmethod
    def orient_lambda(cls, n: int, k: int) -> "SectorElement":
        """u_l_k, the orientation class of l_k: top level, degree 2 - l_k."""
        v = VirtualRep.one(n, 2) - VirtualRep.lam(n, k)
        return cls.from_dict(n, v, {i: Fraction(1, 2 ** (n - i)) for i in range(k + 1)})

    @classmethod
    def orient_2sigma(cls, n: int) -> "SectorElement":
        """u_2sigma, the orientation class of sigma + sigma: top level,
        degree 2 - 2*sigma."""
        v = VirtualRep.one(n, 2) - 2 * VirtualRep.sigma(n)
        return cls.from_dict(n, v, {i: Fraction(1, 2 ** (n - i)) for i in range(n)})

    @classmethod
    def orient_sigma(cls, n: int) -> "SectorElement":
        """u_sigma, the orientation class of sigma, living one level
        below the top in degree 1 - sigma."""
        v = VirtualRep.one(n, 1) - VirtualRep.sigma(n)
        return cls.from_dict(n - 1, v,
                             {i: Fraction(1, 2 ** (n - 1 - i)) for i in range(n)})

    # -- algebra --------------------------------------------------------------

    def _coeff_map(self) -> dict[int, Fraction]:
        return dict(self.coeffs)

    def __add__(self, other: "SectorElement") -> "SectorElement":
        if not isinstance(other, SectorElement):
            return NotImplemented
        if other.level != self.level or other.degree != self.degree:
            raise ValueError("operands are degree-inhomogeneous or live at different levels")
        out = self._coeff_map()
        for i, q in other.coeffs:
            out[i] = out.get(i, Fraction(0)) + q
        return SectorElement.from_dict(self.level, self.degree, out)

    def __sub__(self, other: "SectorElement") -> "SectorElement":
        return self + other.scale(-1)

    def scale(self, q: Fraction | int) -> "SectorElement":
        q = Fraction(q)
        return SectorElement(self.level, self.degree,
                             tuple((i, q * a) for i, a in self.coeffs))

    def __mul__(self, other: "SectorElement") -> "SectorElement":
        """Sectorwise product: exponents add within a sector, cross-sector
        products vanish.  In the transferred basis two sector-i lines at
        level h multiply with structure constant 2^(h-i)."""
        if not isinstance(other, SectorElement):
            return NotImplemented
        if other.level != self.level:
            raise ValueError("operands live at different levels")
        if other.n != self.n:
            raise ValueError("ambient group exponents differ")
        theirs = other._coeff_map()
        out = {}
        for i, q in self.coeffs:
            if i in theirs:
                out[i] = q * theirs[i] * 2 ** (self.level - i)
        return SectorElement.from_dict(self.level, self.degree + other.degree, out)

    def res(self, level: int) -> "SectorElement":
        """Restrict to a lower level: sectors above it are cut away and
        each surviving coordinate gains a factor 2 per level dropped."""
        if not 0 <= level <= self.level:
            raise ValueError(f"cannot restrict level {self.level} to {level}")
        factor = Fraction(2 ** (self.level - level))
        out = {i: q * factor for i, q in self.coeffs if i <= level}
        return SectorElement.from_dict(level, self.degree, out)

    def tr(self) -> "SectorElement":
        """Transfer one level up.  The transferred basis makes this
        coordinate-preserving, except that sign lines die at the top."""
        if self.level >= self.n:
            raise ValueError("cannot transfer above the ambient group")
        target = self.level + 1
        out = {i: q for i, q in self.coeffs if _sector_alive(self.degree, i, target)}
        return SectorElement.from_dict(target, self.degree, out)

    def inverse(self) -> "SectorElement":
        """The sectorwise inverse: the product with it is the sum of the
        idempotents of the support (for a single-sector generator y_i*g
        this is exactly y_i)."""
        if not self.coeffs:
            raise ValueError("the zero element has no inverse")
        out = {i: Fraction(1, 1) / (q * 4 ** (self.level - i)) for i, q in self.coeffs}
        return SectorElement.from_dict(self.level, -self.degree, out)

    def project(self, sectors: Iterable[int]) -> "SectorElement":
        """Keep only the chosen sectors (multiplication by their
        idempotents)."""
        keep = set(sectors)
        return SectorElement(self.level, self.degree,
                             tuple((i, q) for i, q in self.coeffs if i in keep))

    def is_zero(self) -> bool:
        return not self.coeffs

    def monomials(self) -> tuple[tuple[int, SectorMonomial, Fraction], ...]:
        """The explicit local view: for each sector, the unique monomial
        over the level's own alphabet in the restricted degree."""
        local = self.degree.restrict(self.level)
        return tuple((i, SectorMonomial.for_degree(self.level, i, local), q)
                     for i, q in self.coeffs)

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for i, mono, q in self.monomials():
            body = f"y{i}"
            if mono.exponents:
                body += f"*{mono}"
            parts.append(f"{q}*{body}" if q != 1 else body)
        return " + ".join(parts)


# ---------------------------------------------------------------------------
# Presentation of the point and fixed-point degree lattices.

@dataclass(frozen=True)
class PresentationGenerator:
    """One invertible generator pair of the point presentation: the
    direct class and its sectorwise inverse partner span the unit group
    of one sector lattice in one degree."""

    family: int
    sector: int
    lam_index: int | None
    sign: int
    degree: VirtualRep
    name: str
    partner: str

    def spans(self) -> str:
        return f"M{self.sector}" + ("-" if self.sign == MINUS else "")


@dataclass(frozen=True)
class PointPresentation:
    n: int
    generators: tuple[PresentationGenerator, ...]
    relations: tuple[str, ...]
    normalization: str

    def generator_count(self) -> int:
        """Direct generators and their inverse partners, counted together."""
        return 2 * len(self.generators)


def point_presentation(n: int) -> PointPresentation:
    """Generators and relations of the RO(G)-graded rational point ring.

    Four families of invertible pairs: the restricted orientation class
    of sigma (one per sector i < n, spanning a sign line), restricted
    orientation classes of the rotations (sectors i <= k), restricted
    Euler classes of the rotations (sectors i > k), and the Euler class
    of sigma in the top sector.  All listed products inside a sector
    multiply with structure constant 1; cross-sector products vanish.
    """
    if n < 1:
        raise ValueError("the presentation needs n >= 1")
    gens: list[PresentationGenerator] = []
    one, sig = VirtualRep.one(n, 1), VirtualRep.sigma(n)
    for i in range(n):
        gens.append(PresentationGenerator(
            1, i, None, MINUS, one - sig,
            f"y{i}*res(u_sigma)", f"y{i}/res(u_sigma)"))
    for k in range(n - 1):
        deg = VirtualRep.one(n, 2) - VirtualRep.lam(n, k)
        for i in range(k + 1):
            gens.append(PresentationGenerator(
                2, i, k, PLUS, deg,
                f"y{i}*res(u_l{k})", f"y{i}/res(u_l{k})"))
    for k in range(n - 1):
        deg = -VirtualRep.lam(n, k)
        for i in range(k + 1, n + 1):
            gens.append(PresentationGenerator(
                3, i, k, PLUS, deg,
                f"y{i}*res(a_l{k})", f"y{i}/res(a_l{k})"))
    gens.append(PresentationGenerator(4, n, None, PLUS, -sig,
                                      "a_sigma", f"y{n}/a_sigma"))
    relations = [f"({g.name})*({g.partner}) = y{g.sector}" for g in gens]
    relations.append("a_sigma*u_2sigma = 0")
    for k in range(n - 1):
        relations.append(f"a_sigma*u_l{k} = 0")
    for k in range(n - 1):
        for kp in range(k + 1):
            relations.append(f"a_l{k}*u_l{kp} = 0")
    note = ("orientation class scalars are normalized to 1; "
            "only scalar ratios are observable")
    return PointPresentation(n, tuple(gens), tuple(relations), note)


@dataclass(frozen=True)
class FixedPointRings:
    """Degree lattices of the geometric and homotopy fixed-point rings.

    Both rings are Laurent: the geometric one on the Euler classes
    (dimension 1 exactly where d = 0, the top sector's lattice), the
    homotopy one on the invertible even orientation classes u_2sigma
    and u_l_k (the even-u sublattice of sector 0).
    """

    n: int

    def geometric_dim(self, v: VirtualRep) -> int:
        self._check(v)
        return 1 if v.d == 0 else 0

    def homotopy_dim(self, v: VirtualRep) -> int:
        self._check(v)
        return 1 if v.s % 2 == 0 and v.d == -v.s - 2 * sum(v.c) else 0

    def _check(self, v: VirtualRep) -> None:
        if v.n != self.n:
            raise ValueError("degree has the wrong ambient exponent")

    @property
    def geometric_description(self) -> str:
        return "Laurent lattice on a_sigma and all a_l_k: dimension 1 on {d = 0}"

    @property
    def homotopy_description(self) -> str:
        return ("Laurent lattice on u_2sigma and all u_l_k: dimension 1 on "
                "{s even, d = -s - 2*(c_0 + ... + c_{n-2})}")

    @property
    def tate_remark(self) -> str:
        return ("the Tate construction vanishes: inverting the Euler classes "
                "kills every orientation lattice and conversely")


def fixed_point_rings(n: int) -> FixedPointRings:
    if n < 1:
        raise ValueError("fixed-point rings need n >= 1")
    return FixedPointRings(n)


def lattice_mismatches(n: int, bound: int) -> list[str]:
    """Compare the two fixed-point lattices against stem multiplicities
    over the coordinate box [-bound, bound]^(n+1): the geometric lattice
    must match the M_n multiplicity, the homotopy lattice the M_0^+
    multiplicity.  Returns human-readable mismatch reports (expected
    empty)."""
    rings = fixed_point_rings(n)
    bad = []
    for coords in product(range(-bound, bound + 1), repeat=n + 1):
        v = VirtualRep(n, coords[0], coords[1], coords[2:])
        cls = stem_at(v)
        if rings.geometric_dim(v) != cls.mult(n, PLUS):
            bad.append(f"geometric lattice disagrees with M{n} multiplicity at {v}")
        if rings.homotopy_dim(v) != cls.mult(0, PLUS):
            bad.append(f"homotopy lattice disagrees with M0 multiplicity at {v}")
    return bad
