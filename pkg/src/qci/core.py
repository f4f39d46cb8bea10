"""Invariants of a triple of forms cutting out a finite plane scheme.

All invariants are obtained by degreewise linear algebra over the prime
field.  For a triple with sorted degrees a <= b <= c the central object is
the evaluation map

    S_{m-a} + S_{m-b} + S_{m-c}  ->  S_m,   (A, B, C) |-> A*Fa + B*Fb + C*Fc

whose rank gives the Hilbert function of the quotient, whose kernel at
m = k + c gives the space of degree-k syzygies, and whose left null space
drives the saturation computation.  The scheme degree t is read off as the
plateau of the quotient Hilbert function; the minimal syzygy degree r is
the first twist in the window [a-c, a+b-c] carrying a syzygy (the upper
end always does, by the Koszul relation between the first two forms).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import GuardError, InternalError, PlateauError
from .linalg import PrimeField, kernel_basis, rank
from .poly import HomogPoly, basis_index, dim_S, monomial_basis, mult_matrix

# plateau confirmation needs this many equal trailing Hilbert values
_TAIL = 4


def _chi(k: int) -> int:
    # Euler characteristic polynomial of O(k) on the plane, valid for all k
    return (k + 1) * (k + 2) // 2


class QciInput:
    """Three homogeneous forms, stored sorted by degree a <= b <= c."""

    __slots__ = ("polys",)

    def __init__(self, polys: tuple[HomogPoly, HomogPoly, HomogPoly]):
        self.polys = polys

    @classmethod
    def of(cls, f1: HomogPoly, f2: HomogPoly, f3: HomogPoly) -> "QciInput":
        triple = (f1, f2, f3)
        if f1.field != f2.field or f1.field != f3.field:
            raise GuardError("all three forms must live over the same prime field")
        if all(f.is_zero for f in triple):
            raise GuardError("at least one form must be nonzero")
        p = f1.field.p
        total = f1.degree + f2.degree + f3.degree
        if p <= total:
            raise GuardError(
                f"prime {p} too small for degrees summing to {total}; need p > a+b+c"
            )
        return cls(tuple(sorted(triple, key=lambda f: f.degree)))

    @property
    def degrees(self) -> tuple[int, int, int]:
        return tuple(f.degree for f in self.polys)

    @property
    def field(self) -> PrimeField:
        return self.polys[0].field

    @property
    def prime(self) -> int:
        return self.field.p

    def __repr__(self):
        return f"QciInput(degrees={self.degrees}, p={self.prime})"


@dataclass(frozen=True)
class HilbertTable:
    """Quotient Hilbert values for k = 0 .. k_max plus plateau bookkeeping."""

    values: tuple[int, ...]
    k_star: int
    k_max: int
    extensions: int
    plateau: int | None


@dataclass(frozen=True)
class SyzygyTable:
    window: tuple[int, int]
    dims: tuple[tuple[int, int], ...]
    r: int
    generator_degrees: tuple[int, ...]


@dataclass(frozen=True)
class BoundsI:
    lower: int
    upper: int
    lower_ok: bool
    upper_ok: bool


@dataclass(frozen=True)
class BoundsII:
    applicable: bool
    bound: int | None
    ok: bool | None


@dataclass(frozen=True)
class Classification:
    tag: str
    case: int | None
    e_type: tuple[int, int] | None
    resolution: tuple[tuple[int, ...], tuple[int, ...]] | None


@dataclass(frozen=True)
class QciReport:
    prime: int
    degrees: tuple[int, int, int]
    dimension_class: str
    refusal: str | None
    t: int | None
    r: int | None
    gamma: int | None
    c2_at_r: int | None
    m0: int | None
    h1_at_m0: int | None
    splits: bool | None
    bounds_i: BoundsI | None
    bounds_ii: BoundsII | None
    generator_degrees: tuple[int, ...] | None
    classification: Classification | None
    resolution_verified: bool | None
    hilbert: HilbertTable
    syzygies: SyzygyTable | None

    def to_dict(self) -> dict:
        """Plain-data view with a fixed key order, safe to serialize."""
        cls = None
        if self.classification is not None:
            res = None
            if self.classification.resolution is not None:
                u, v = self.classification.resolution
                res = {"u": [int(x) for x in u], "v": [int(x) for x in v]}
            cls = {
                "tag": self.classification.tag,
                "case": self.classification.case,
                "e_type": (
                    None
                    if self.classification.e_type is None
                    else [int(x) for x in self.classification.e_type]
                ),
                "resolution": res,
            }
        syz = None
        if self.syzygies is not None:
            syz = {
                "window": [int(x) for x in self.syzygies.window],
                "dims": [[int(k), int(v)] for k, v in self.syzygies.dims],
                "r": int(self.syzygies.r),
            }
        return {
            "dimension_class": self.dimension_class,
            "refusal": self.refusal,
            "t": _opt_int(self.t),
            "r": _opt_int(self.r),
            "gamma": _opt_int(self.gamma),
            "c2_at_r": _opt_int(self.c2_at_r),
            "m0": _opt_int(self.m0),
            "h1_at_m0": _opt_int(self.h1_at_m0),
            "splits": self.splits,
            "bounds_i": (
                None
                if self.bounds_i is None
                else {
                    "lower": int(self.bounds_i.lower),
                    "upper": int(self.bounds_i.upper),
                    "lower_ok": self.bounds_i.lower_ok,
                    "upper_ok": self.bounds_i.upper_ok,
                }
            ),
            "bounds_ii": (
                None
                if self.bounds_ii is None
                else {
                    "applicable": self.bounds_ii.applicable,
                    "bound": _opt_int(self.bounds_ii.bound),
                    "ok": self.bounds_ii.ok,
                }
            ),
            "generator_degrees": (
                None
                if self.generator_degrees is None
                else [int(x) for x in self.generator_degrees]
            ),
            "classification": cls,
            "resolution_verified": self.resolution_verified,
            "hilbert": {
                "k_star": int(self.hilbert.k_star),
                "k_max": int(self.hilbert.k_max),
                "extensions": int(self.hilbert.extensions),
                "plateau": _opt_int(self.hilbert.plateau),
                "values": [int(v) for v in self.hilbert.values],
            },
            "syzygies": syz,
        }


def _opt_int(x):
    return None if x is None else int(x)


class _Analysis:
    """Per-input computation engine with degreewise caches.

    Every method is deterministic; caches only memoize pure functions of
    the input, so evaluation order never changes a result.
    """

    def __init__(self, Q: QciInput, max_extensions: int = 2):
        self.Q = Q
        self.field = Q.field
        self.max_extensions = max_extensions
        a, b, c = Q.degrees
        self.a, self.b, self.c = a, b, c
        self.k_star = a + b + c - 2
        self._maps: dict[int, np.ndarray] = {}
        self._ranks: dict[int, int] = {}
        self._kernels: dict[int, np.ndarray] = {}
        self._left: dict[int, np.ndarray] = {}
        self._sat: dict[int, int] = {}
        self._dim_info = None
        self._syzygy = None

    # -- evaluation maps ------------------------------------------------

    def map_at(self, m: int) -> np.ndarray:
        M = self._maps.get(m)
        if M is None:
            blocks = [mult_matrix(f, m - f.degree) for f in self.Q.polys]
            M = np.hstack(blocks)
            self._maps[m] = M
        return M

    def rank_at(self, m: int) -> int:
        v = self._ranks.get(m)
        if v is None:
            v = 0 if m < 0 else rank(self.map_at(m), self.field)
            self._ranks[m] = v
        return v

    def hilbert_value(self, k: int) -> int:
        if k < 0:
            raise GuardError("quotient Hilbert values are defined for k >= 0")
        return dim_S(k) - self.rank_at(k)

    # -- dimension detection --------------------------------------------

    def dimension(self) -> tuple[str, int | None, HilbertTable]:
        if self._dim_info is not None:
            return self._dim_info
        k_max = max(self.k_star + _TAIL - 1, _TAIL - 1)
        extensions = 0
        while True:
            values = tuple(self.hilbert_value(k) for k in range(k_max + 1))
            tail = values[-_TAIL:]
            if all(v == 0 for v in tail):
                info = ("empty", 0, tail[0])
                break
            if all(v == tail[0] for v in tail):
                info = ("dim0", tail[0], tail[0])
                break
            nondecreasing = all(x <= y for x, y in zip(tail, tail[1:]))
            if nondecreasing and tail[-1] > tail[0]:
                info = ("dim_ge_1", None, None)
                break
            if extensions >= self.max_extensions:
                raise PlateauError(
                    "quotient Hilbert values did not stabilize by degree "
                    f"{k_max} (tail {list(tail)}); the input may not define "
                    "a finite scheme"
                )
            extensions += 1
            k_max += 3
        tag, t, plateau = info
        table = HilbertTable(
            values=values,
            k_star=self.k_star,
            k_max=k_max,
            extensions=extensions,
            plateau=plateau,
        )
        self._dim_info = (tag, t, table)
        return self._dim_info

    @property
    def eff_kstar(self) -> int:
        # stabilization anchor, pushed up if the plateau needed extensions
        tag, t, table = self.dimension()
        return table.k_max - (_TAIL - 1)

    def require_dim0(self) -> int:
        tag, t, _ = self.dimension()
        if tag != "dim0":
            raise GuardError(
                f"operation needs a finite nonempty scheme; input is {tag}"
            )
        return t

    # -- syzygies ---------------------------------------------------------

    def kernel_at(self, m: int) -> np.ndarray:
        K = self._kernels.get(m)
        if K is None:
            K = kernel_basis(self.map_at(m), self.field)
            self._kernels[m] = K
        return K

    def h0E(self, k: int) -> int:
        return self.kernel_at(k + self.c).shape[0]

    def syzygy_table(self) -> SyzygyTable:
        if self._syzygy is not None:
            return self._syzygy
        a, b, c = self.a, self.b, self.c
        lo, hi = a - c, a + b - c
        dims = tuple((k, self.h0E(k)) for k in range(lo, hi + 1))
        r = None
        for k, d in dims:
            if d > 0:
                r = k
                break
        if r is None:
            raise InternalError(
                "no syzygy found in the guaranteed window "
                f"[{lo}, {hi}]; the Koszul relation must appear there"
            )
        gens = self._generator_degrees(lo, hi + 1)
        self._syzygy = SyzygyTable(
            window=(lo, hi), dims=dims, r=r, generator_degrees=gens
        )
        return self._syzygy

    def _lift_index(self, m: int, axis: int) -> np.ndarray:
        # column map of multiplication by the axis variable from the
        # syzygy coordinate space at twist m - c into the one at m - c + 1
        src_offsets = []
        off = 0
        for f in self.Q.polys:
            src_offsets.append(off)
            off += dim_S(m - f.degree)
        idx = np.empty(off, dtype=np.int64)
        tgt_off = 0
        for block, f in enumerate(self.Q.polys):
            e = m - f.degree
            tgt_index = basis_index(e + 1)
            base = src_offsets[block]
            for j, mono in enumerate(monomial_basis(e)):
                lifted = list(mono)
                lifted[axis] += 1
                idx[base + j] = tgt_off + tgt_index[tuple(lifted)]
            tgt_off += dim_S(e + 1)
        return idx

    def _generator_degrees(self, lo: int, hi: int) -> tuple[int, ...]:
        """New minimal syzygy generators per twist, scanned over [lo, hi].

        A twist-k syzygy already reachable as (variable) * (twist k-1
        syzygy) is not new; the count of new ones is the kernel dimension
        minus the rank of the lifted previous kernel.  Twists above hi are
        not scanned, so the multiset is a truncation, not a Betti table.
        """
        gens: list[int] = []
        for k in range(lo, hi + 1):
            m = k + self.c
            h0 = self.h0E(k)
            if h0 == 0:
                continue
            prev = self.kernel_at(m - 1)
            if prev.shape[0] == 0:
                new = h0
            else:
                cols = self.map_at(m).shape[1]
                lifted = np.zeros((3 * prev.shape[0], cols), dtype=np.int64)
                for axis in range(3):
                    idx = self._lift_index(m - 1, axis)
                    block = lifted[axis * prev.shape[0] : (axis + 1) * prev.shape[0]]
                    block[:, idx] = prev
                new = h0 - rank(lifted, self.field)
            if new < 0:
                raise InternalError(
                    "lifted syzygies exceed the kernel dimension at twist "
                    f"{k}; multiplication lift is broken"
                )
            gens.extend([k] * new)
        return tuple(gens)

    # -- derived invariants -----------------------------------------------

    def c2_at_r(self) -> int:
        t = self.require_dim0()
        r = self.syzygy_table().r
        a, b, c = self.a, self.b, self.c
        value = r * (c - a - b) + a * b - t + r * r
        if value < 0:
            raise InternalError(
                f"second Chern number {value} of the minimally twisted syzygy "
                "bundle is negative; computation is inconsistent"
            )
        return value

    def gamma(self) -> int:
        t = self.require_dim0()
        g = self.a * self.c - t
        if g < 0 or g > self.a * self.c:
            raise InternalError(
                f"residual degree {g} outside [0, {self.a * self.c}]; "
                "the scheme degree exceeds the pencil degree product"
            )
        return g

    def bounds(self) -> tuple[BoundsI, BoundsII]:
        t = self.require_dim0()
        r = self.syzygy_table().r
        a, b, c = self.a, self.b, self.c
        lower = c * (a + b - c - r)
        upper = r * r + r * (c - a - b) + a * b
        bi = BoundsI(lower=lower, upper=upper, lower_ok=lower <= t, upper_ok=t <= upper)
        if 2 * r > a + b - c:
            cut = (c - a - b + 2 * r + 1) * (c - a - b + 2 * r) // 2
            bound = upper - cut
            bii = BoundsII(applicable=True, bound=bound, ok=t <= bound)
        else:
            bii = BoundsII(applicable=False, bound=None, ok=None)
        return bi, bii

    def m0(self) -> int:
        # twist at which the normalized bundle criterion reads h^1: the
        # first Chern number of E(m0) must land in {-2, -3}
        a, b, c = self.a, self.b, self.c
        return (a + b - c - 2) // 2

    # -- saturation --------------------------------------------------------

    def left_null(self, m: int) -> np.ndarray:
        N = self._left.get(m)
        if N is None:
            N = kernel_basis(self.map_at(m).T, self.field)
            self._left[m] = N
        return N

    def saturation_dim(self, m: int) -> int:
        if m < 0:
            return 0
        v = self._sat.get(m)
        if v is not None:
            return v
        e = max(1, self.eff_kstar + 1 - m)
        N = self.left_null(m + e)
        if N.shape[0] == 0:
            v = dim_S(m)
        else:
            tgt = basis_index(m + e)
            blocks = []
            for nu in monomial_basis(e):
                cols = [
                    tgt[(mu[0] + nu[0], mu[1] + nu[1], mu[2] + nu[2])]
                    for mu in monomial_basis(m)
                ]
                blocks.append(N[:, cols])
            stacked = np.vstack(blocks)
            v = dim_S(m) - rank(stacked, self.field)
        self._sat[m] = v
        return v

    def h1E(self, k: int) -> int:
        m = self.c + k
        if m < 0:
            return 0
        v = self.saturation_dim(m) - self.rank_at(m)
        if v < 0:
            raise InternalError(
                f"saturation lost ideal elements in degree {m}; "
                "saturation must contain the ideal"
            )
        return v

    def splits(self) -> tuple[bool, int, int]:
        h1 = self.h1E(self.m0())
        by_h1 = h1 == 0
        by_c2 = self.c2_at_r() == 0
        if by_h1 != by_c2:
            raise InternalError(
                "splitting tests disagree: vanishing middle cohomology says "
                f"{by_h1} but the Chern criterion says {by_c2}"
            )
        return by_h1, self.m0(), h1

    # -- classification ------------------------------------------------------

    def classify(self) -> Classification:
        t = self.require_dim0()
        a, b, c = self.a, self.b, self.c
        r = self.syzygy_table().r
        c2 = self.c2_at_r()
        split_e = (-r, c - a - b + r)
        split_res = ((c + r, a + b - r), (a, b, c))
        c2one_res = ((c + r - 1, c + r - 1, a + b - r), (c + r - 2, a, b, c))

        if r == a - c:
            if t != a * c:
                raise InternalError(
                    f"minimal twist {r} forces a pencil intersection of degree "
                    f"{a * c}, but the scheme degree is {t}"
                )
            return Classification(
                tag="complete-intersection",
                case=None,
                e_type=split_e,
                resolution=((a + c,), (a, c)),
            )
        if r == a - c + 1:
            if b > a + 1:
                raise InternalError(
                    f"minimal twist {r} is incompatible with degrees "
                    f"({a}, {b}, {c}); the middle degree may exceed a by at most 1"
                )
            if a == b and t == c * (a - 1):
                if c2 != 1:
                    raise InternalError(
                        f"near-minimal twist case 1 requires Chern number 1, got {c2}"
                    )
                return Classification(
                    tag="r-eq-a-minus-c-plus-1", case=1, e_type=None,
                    resolution=c2one_res,
                )
            if a == b and t == c * (a - 1) + 1:
                if c2 != 0:
                    raise InternalError(
                        f"near-minimal twist case 2 requires Chern number 0, got {c2}"
                    )
                return Classification(
                    tag="aci-split", case=2, e_type=split_e, resolution=split_res
                )
            if b == a + 1 and t == a * c:
                if c2 != 0:
                    raise InternalError(
                        f"near-minimal twist case 3 requires Chern number 0, got {c2}"
                    )
                return Classification(
                    tag="r-eq-a-minus-c-plus-1", case=3, e_type=split_e,
                    resolution=split_res,
                )
            raise InternalError(
                f"minimal twist {a - c + 1} with signature (a={a}, b={b}, t={t}) "
                "matches none of the three admissible cases"
            )
        if c2 == 0:
            if 2 * r > a + b - c:
                raise InternalError(
                    f"split bundle with minimal twist {r} violates 2r <= a+b-c"
                )
            return Classification(
                tag="aci-split", case=None, e_type=split_e, resolution=split_res
            )
        if c2 == 1:
            if 2 * r > a + b - c + 1:
                raise InternalError(
                    f"Chern-one bundle with minimal twist {r} violates "
                    "2r <= a+b-c+1"
                )
            return Classification(
                tag="c2-one-resolution", case=None, e_type=None, resolution=c2one_res
            )
        return Classification(tag="generic", case=None, e_type=None, resolution=None)

    def verify_resolution(
        self, u: tuple[int, ...], v: tuple[int, ...]
    ) -> bool:
        """Numeric check of a claimed resolution 0 -> +O(-u) -> +O(-v) -> I -> 0.

        Compares the alternating sum of graded dimensions against the
        saturation in four consecutive degrees above the stabilization
        anchor, and the alternating Euler characteristic against t.
        """
        t = self.require_dim0()
        base = self.eff_kstar
        for m in range(base, base + _TAIL):
            predicted = sum(dim_S(m - vj) for vj in v) - sum(
                dim_S(m - ui) for ui in u
            )
            if self.saturation_dim(m) != predicted:
                return False
            euler = _chi(m) - (
                sum(_chi(m - vj) for vj in v) - sum(_chi(m - ui) for ui in u)
            )
            if euler != t:
                return False
        return True


# -- public operations ----------------------------------------------------


def graded_map_matrix(Q: QciInput, m: int) -> np.ndarray:
    return _Analysis(Q).map_at(m)


def quotient_hilbert(Q: QciInput, k: int) -> int:
    return _Analysis(Q).hilbert_value(k)


def dimension_class(
    Q: QciInput, max_extensions: int = 2
) -> tuple[str, int | None]:
    tag, t, _ = _Analysis(Q, max_extensions).dimension()
    return tag, t


def degree_t(Q: QciInput, max_extensions: int = 2) -> int:
    return _Analysis(Q, max_extensions).require_dim0()


def syzygy_dims(Q: QciInput, max_extensions: int = 2) -> SyzygyTable:
    eng = _Analysis(Q, max_extensions)
    eng.require_dim0()
    return eng.syzygy_table()


def c2_at_r(Q: QciInput, max_extensions: int = 2) -> int:
    return _Analysis(Q, max_extensions).c2_at_r()


def certify_bounds(Q: QciInput, max_extensions: int = 2) -> tuple[BoundsI, BoundsII]:
    return _Analysis(Q, max_extensions).bounds()


def saturation_dim(Q: QciInput, m: int, max_extensions: int = 2) -> int:
    eng = _Analysis(Q, max_extensions)
    eng.require_dim0()
    return eng.saturation_dim(m)


def h1_E(Q: QciInput, k: int, max_extensions: int = 2) -> int:
    eng = _Analysis(Q, max_extensions)
    eng.require_dim0()
    return eng.h1E(k)


def splits(Q: QciInput, max_extensions: int = 2) -> bool:
    return _Analysis(Q, max_extensions).splits()[0]


def syzygy_generator_degrees(
    Q: QciInput, max_extensions: int = 2
) -> tuple[int, ...]:
    return syzygy_dims(Q, max_extensions).generator_degrees


def classify(Q: QciInput, max_extensions: int = 2) -> Classification:
    return _Analysis(Q, max_extensions).classify()


def verify_resolution(
    Q: QciInput,
    resolution: tuple[tuple[int, ...], tuple[int, ...]],
    max_extensions: int = 2,
) -> bool:
    u, v = resolution
    return _Analysis(Q, max_extensions).verify_resolution(tuple(u), tuple(v))


def linked_degree(Q: QciInput, max_extensions: int = 2) -> int:
    return _Analysis(Q, max_extensions).gamma()


def analyze_qci(Q: QciInput, max_extensions: int = 2) -> QciReport:
    """Full invariant battery for one input, computed on a shared engine."""
    eng = _Analysis(Q, max_extensions)
    tag, t, table = eng.dimension()
    if tag != "dim0":
        refusal = (
            "empty scheme: the three forms have no common zero"
            if tag == "empty"
            else "positive-dimensional common zero locus; invariants need a "
            "finite scheme"
        )
        return QciReport(
            prime=Q.prime,
            degrees=Q.degrees,
            dimension_class=tag,
            refusal=refusal,
            t=t if tag == "empty" else None,
            r=None,
            gamma=None,
            c2_at_r=None,
            m0=None,
            h1_at_m0=None,
            splits=None,
            bounds_i=None,
            bounds_ii=None,
            generator_degrees=None,
            classification=None,
            resolution_verified=None,
            hilbert=table,
            syzygies=None,
        )
    syz = eng.syzygy_table()
    c2 = eng.c2_at_r()
    gamma = eng.gamma()
    bi, bii = eng.bounds()
    split_flag, m0, h1 = eng.splits()
    cls = eng.classify()
    verified = None
    if cls.resolution is not None:
        verified = eng.verify_resolution(*cls.resolution)
        if not verified:
            raise InternalError(
                f"predicted resolution for tag {cls.tag} failed numeric "
                "verification"
            )
    return QciReport(
        prime=Q.prime,
        degrees=Q.degrees,
        dimension_class=tag,
        refusal=None,
        t=t,
        r=syz.r,
        gamma=gamma,
        c2_at_r=c2,
        m0=m0,
        h1_at_m0=h1,
        splits=split_flag,
        bounds_i=bi,
        bounds_ii=bii,
        generator_degrees=syz.generator_degrees,
        classification=cls,
        resolution_verified=verified,
        hilbert=table,
        syzygies=syz,
    )
