"""Fock-space model of the rank-2 even unimodular Lorentzian lattice
conformal vertex algebra.

The lattice is Z + Z with pairing <(m1,n1),(m2,n2)> = -m1*n2 - n1*m2
(Gram matrix [[0,-1],[-1,0]]).  States are exact rational combinations of
monomials

    u1(-n1) ... u1/u2(-nk) . iota(a),

where u1 = (1,0) and u2 = (0,1) are the coordinate Heisenberg generators
and iota(a) is the group-algebra image of an element a of the sign double
cover of the lattice.  Every creation mode lambda(-n) is expanded in the
coordinate basis and monomials are kept sorted, so structural equality of
the term dictionaries coincides with equality of states; that exactness
is what the bracket verifications downstream rely on.

The double cover multiplies by (lam, s) * (mu, t) = (lam + mu, s t
eps(lam, mu)) with the bilinear 2-cocycle eps(lam, mu) = (-1)**(lam.m *
mu.n).  Its commutator eps(lam,mu) eps(mu,lam) = (-1)**<lam,mu> is the
one the central extension prescribes; any other bilinear choice differs
only by a rescaling of the iota map, and results downstream are checked
to be invariant under the flip.

Virasoro modes act through the commutation rules

    [L(n), lam(-k)] = k lam(n-k),       L(n) iota(a) = 0        (n >= 1),
    L(0) iota(a) = <abar,abar>/2 iota(a),  L(-1) iota(a) = abar(-1) iota(a),

extended to all n <= -2 on iota vectors by the normal-ordered quadratic
expression in dual-basis modes; the central charge is 2, the rank of the
lattice.  Expanding the conformal vector's modes directly is kept out of
this module and used only as a test oracle.
"""

from __future__ import annotations

from collections import Counter
from fractions import Fraction
from itertools import product
from math import comb, ceil


class UnsupportedStateError(ValueError):
    """A vertex-operator coefficient was requested on a state shape the
    expansion does not cover."""


def _frac(x):
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    raise TypeError(f"expected an exact rational, got {type(x).__name__}")


class LatticeVector:
    """Element of the rank-2 lattice, rational coordinates allowed.

    Rational coordinates occur for Heisenberg modes (the ambient Cartan
    is the lattice tensored with the rationals); double-cover elements
    require integral coordinates.
    """

    __slots__ = ("m", "n")

    def __init__(self, m, n):
        object.__setattr__(self, "m", _frac(m))
        object.__setattr__(self, "n", _frac(n))

    def __setattr__(self, name, value):
        raise AttributeError("LatticeVector is immutable")

    def __eq__(self, other):
        return (
            isinstance(other, LatticeVector)
            and self.m == other.m
            and self.n == other.n
        )

    def __hash__(self):
        return hash((self.m, self.n))

    def __add__(self, other):
        return LatticeVector(self.m + other.m, self.n + other.n)

    def __sub__(self, other):
        return LatticeVector(self.m - other.m, self.n - other.n)

    def __neg__(self):
        return LatticeVector(-self.m, -self.n)

    def __rmul__(self, scalar):
        c = _frac(scalar)
        return LatticeVector(c * self.m, c * self.n)

    def is_integral(self):
        return self.m.denominator == 1 and self.n.denominator == 1

    def int_pair(self):
        if not self.is_integral():
            raise ValueError(f"{self!r} is not a lattice point")
        return (int(self.m), int(self.n))

    def is_zero(self):
        return self.m == 0 and self.n == 0

    def __repr__(self):
        return f"({self.m},{self.n})"


def pairing(u, v):
    """Bilinear form <u,v> = -u.m*v.n - u.n*v.m (symmetric, even, unimodular)."""
    return -(u.m * v.n) - (u.n * v.m)


def weyl_reflect(v):
    """Reflection in the unique positive real root: coordinate swap."""
    return LatticeVector(v.n, v.m)


def cocycle_sign(lam, mu):
    """The chosen bilinear 2-cocycle (-1)**(lam.m * mu.n) on lattice points."""
    m = lam.m
    n = mu.n
    if m.denominator != 1 or n.denominator != 1:
        raise ValueError("cocycle is defined on lattice points only")
    return -1 if (m.numerator % 2) and (n.numerator % 2) else 1


class HatLatticeElement:
    """Element (vector, sign) of the sign double cover of the lattice."""

    __slots__ = ("vector", "sign")

    def __init__(self, vector, sign=1):
        if not isinstance(vector, LatticeVector):
            vector = LatticeVector(*vector)
        if not vector.is_integral():
            raise ValueError("double-cover elements sit over lattice points")
        if sign not in (1, -1):
            raise ValueError("sign must be +1 or -1")
        object.__setattr__(self, "vector", vector)
        object.__setattr__(self, "sign", sign)

    def __setattr__(self, name, value):
        raise AttributeError("HatLatticeElement is immutable")

    def __eq__(self, other):
        return (
            isinstance(other, HatLatticeElement)
            and self.vector == other.vector
            and self.sign == other.sign
        )

    def __hash__(self):
        return hash((self.vector, self.sign))

    def __repr__(self):
        s = "" if self.sign == 1 else "-"
        return f"{s}hat{self.vector!r}"


HAT_IDENTITY = HatLatticeElement(LatticeVector(0, 0), 1)


def hat_multiply(a, b):
    """Group law of the double cover: signs compose through the cocycle."""
    return HatLatticeElement(
        a.vector + b.vector, a.sign * b.sign * cocycle_sign(a.vector, b.vector)
    )


def hat_inverse(a):
    """Inverse in the double cover: a * hat_inverse(a) is the identity."""
    return HatLatticeElement(-a.vector, a.sign * cocycle_sign(a.vector, -a.vector))


def section(m, n, sign=1):
    """The fixed lift of the lattice point (m, n) used for iota vectors."""
    return HatLatticeElement(LatticeVector(m, n), sign)


# -- Fock states --------------------------------------------------------

# A term key is (mono, abar) with mono a sorted tuple of (axis, n) pairs
# (axis 0 for u1 = (1,0), axis 1 for u2 = (0,1); n >= 1 the mode depth)
# and abar the integer coordinate pair under the covering element, whose
# sign is folded into the coefficient.

_AXIS_VECTORS = (LatticeVector(1, 0), LatticeVector(0, 1))
_AXIS_NAMES = ("u1", "u2")


class FockState:
    """Finite exact-rational combination of creation monomials on iota vectors."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        clean = {}
        if terms:
            for key, coeff in terms.items():
                c = _frac(coeff)
                if c:
                    clean[key] = clean.get(key, Fraction(0)) + c
                    if not clean[key]:
                        del clean[key]
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("FockState is immutable")

    @classmethod
    def zero(cls):
        return cls()

    @classmethod
    def iota(cls, a):
        """State iota(a) for a double-cover element; kappa acts as -1."""
        return cls({((), a.vector.int_pair()): Fraction(a.sign)})

    @classmethod
    def vacuum(cls):
        return cls.iota(HAT_IDENTITY)

    def is_zero(self):
        return not self.terms

    def __eq__(self, other):
        return isinstance(other, FockState) and self.terms == other.terms

    def __hash__(self):
        raise TypeError("FockState is not hashable")

    def __add__(self, other):
        if not isinstance(other, FockState):
            return NotImplemented
        out = dict(self.terms)
        for key, c in other.terms.items():
            out[key] = out.get(key, Fraction(0)) + c
        return FockState(out)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return FockState({k: -c for k, c in self.terms.items()})

    def __rmul__(self, scalar):
        c = _frac(scalar)
        if not c:
            return FockState.zero()
        return FockState({k: c * v for k, v in self.terms.items()})

    __mul__ = __rmul__

    def __repr__(self):
        if not self.terms:
            return "FockState(0)"
        parts = []
        for (mono, abar), c in sorted(self.terms.items()):
            ops = "".join(f"{_AXIS_NAMES[a]}(-{n})" for a, n in mono)
            parts.append(f"{c}*{ops}iota{abar}")
        return "FockState(" + " + ".join(parts) + ")"


def _create(axis, depth, state):
    """Append the creation factor u_axis(-depth) to every term."""
    if depth <= 0:
        raise ValueError("creation depth must be positive")
    out = {}
    for (mono, abar), c in state.terms.items():
        key = (tuple(sorted(mono + ((axis, depth),))), abar)
        out[key] = out.get(key, Fraction(0)) + c
    return FockState(out)


def heisenberg_apply(lam, n, state):
    """Apply the Heisenberg mode lam(n) to a state.

    n < 0 appends a creation factor (expanded over the coordinate basis),
    n > 0 contracts against matching creation factors through the bracket
    [lam(m), mu(k)] = <lam,mu> m delta(m+k), and lam(0) multiplies each
    term by <lam, abar>.
    """
    if n == 0:
        out = {}
        for (mono, abar), c in state.terms.items():
            scale = pairing(lam, LatticeVector(*abar))
            if scale:
                out[(mono, abar)] = c * scale
        return FockState(out)
    if n < 0:
        result = FockState.zero()
        if lam.m:
            result = result + lam.m * _create(0, -n, state)
        if lam.n:
            result = result + lam.n * _create(1, -n, state)
        return result
    # annihilation: contract against each creation factor of depth n
    out = FockState.zero()
    for (mono, abar), c in state.terms.items():
        counts = Counter(mono)
        for (axis, depth), count in counts.items():
            if depth != n:
                continue
            scale = pairing(lam, _AXIS_VECTORS[axis]) * n * count
            if not scale:
                continue
            reduced = list(mono)
            reduced.remove((axis, depth))
            key = (tuple(reduced), abar)
            out = out + FockState({key: c * scale})
    return out


def schur_apply(lam, r, state):
    """Apply the r-th Schur polynomial p_r(lam(-1), lam(-2), ...).

    The p_r are defined by exp(sum_n x_n y**n / n) = sum_r p_r y**r and
    satisfy r p_r = sum_{n=1}^{r} x_n p_{r-n}; the modes lam(-n) commute,
    so the scalar recursion applies verbatim.
    """
    if r < 0:
        raise ValueError("Schur index must be nonnegative")
    levels = [state]
    for k in range(1, r + 1):
        acc = FockState.zero()
        for n in range(1, k + 1):
            acc = acc + heisenberg_apply(lam, -n, levels[k - n])
        levels.append(Fraction(1, k) * acc)
    return levels[r]


def vertex_iota_coeff(a, b_state, power):
    """Coefficient of x**power in Y(iota(a), x) applied to b_state.

    The operator is the normal-ordered product of a creation exponential,
    an annihilation exponential, left multiplication by a, and x**abar.
    On a creation monomial the annihilation exponential is a finite sum
    over contraction subsets; the creation exponential then contributes
    the Schur term p_r at x**(r + <abar,bbar> - contracted depth).
    """
    if not isinstance(a, HatLatticeElement):
        raise UnsupportedStateError("the operator argument must cover a lattice point")
    out = FockState.zero()
    for (mono, abar), c in b_state.terms.items():
        b_hat = HatLatticeElement(LatticeVector(*abar), 1)
        ab = hat_multiply(a, b_hat)
        base = pairing(a.vector, b_hat.vector)
        if base.denominator != 1:
            raise UnsupportedStateError("non-integral pairing exponent")
        base = int(base)
        entries = sorted(Counter(mono).items())
        ranges = [range(count + 1) for _, count in entries]
        for chosen in product(*ranges):
            factor = Fraction(c) * ab.sign
            depth = 0
            remaining = []
            for ((axis, mode), count), s in zip(entries, chosen):
                if s:
                    factor *= comb(count, s) * (-pairing(a.vector, _AXIS_VECTORS[axis])) ** s
                    depth += mode * s
                remaining.extend([(axis, mode)] * (count - s))
            if not factor:
                continue
            r = power - base + depth
            if r < 0:
                continue
            target = FockState({(tuple(sorted(remaining)), ab.vector.int_pair()): factor})
            out = out + schur_apply(a.vector, r, target)
    return out


# -- Virasoro action -----------------------------------------------------


def virasoro_apply(n, state):
    """Apply the Virasoro mode L(n); exact for every integer n.

    On creation factors the commutation rule [L(n), u(-k)] = k u(n-k) is
    peeled recursively; on iota vectors L(n) annihilates for n >= 1, is
    the grading operator for n = 0, and for n <= -1 contributes abar(n)
    plus (for n <= -2) the normal-ordered quadratic tail in the dual
    coordinate modes.
    """
    out = FockState.zero()
    for (mono, abar), c in state.terms.items():
        out = out + _virasoro_term(n, mono, abar, c)
    return out


def _virasoro_term(n, mono, abar, coeff):
    if mono:
        (axis, k), rest = mono[0], mono[1:]
        rest_state = FockState({(rest, abar): coeff})
        moved = heisenberg_apply(_AXIS_VECTORS[axis], n - k, rest_state)
        result = k * moved
        deeper = _virasoro_term(n, rest, abar, coeff)
        return result + _create(axis, k, deeper)
    abar_vec = LatticeVector(*abar)
    term = FockState({((), abar): coeff})
    if n >= 1:
        return FockState.zero()
    if n == 0:
        return (pairing(abar_vec, abar_vec) / 2) * term
    result = heisenberg_apply(abar_vec, n, term)
    # dual-basis quadratic tail: the dual of u1 is -u2 and vice versa
    for k in range(n + 1, 0):
        t1 = _create(0, -k, _create(1, -(n - k), term))
        t2 = _create(1, -k, _create(0, -(n - k), term))
        result = result + Fraction(-1, 2) * (t1 + t2)
    return result


def conformal_vector():
    """The weight-2 conformal state; its modes are the L(n).

    Built from the quadratic dual-basis expression; equals
    -u1(-1)u2(-1)iota(1), and L(2) applied to it returns the vacuum times
    half the central charge (which is 2, the rank of the lattice).
    """
    return virasoro_apply(-2, FockState.vacuum())


def weight_of(state):
    """The grading of a homogeneous state: <abar,abar>/2 + sum of depths.

    Returns the rational weight, or None when the state is zero or mixes
    weights (inhomogeneous).
    """
    weights = set()
    for (mono, abar), _ in state.terms.items():
        v = LatticeVector(*abar)
        weights.add(pairing(v, v) / 2 + sum(n for _, n in mono))
    if len(weights) != 1:
        return None
    return weights.pop()


def is_primary(state, depth):
    """True when every positive Virasoro mode annihilates the state.

    `depth` bounds the modes checked; for a state of creation degree d and
    homogeneous weight w, modes beyond d + |w| can contribute nothing, so
    the scan stops there when depth exceeds it.
    """
    if depth < 1:
        raise ValueError("depth must be a positive integer")
    if state.is_zero():
        return True
    max_degree = max(sum(n for _, n in mono) for (mono, _) in state.terms)
    w = weight_of(state)
    sufficient = max_degree + (ceil(abs(w)) if w is not None else 0)
    bound = min(depth, sufficient)
    return all(virasoro_apply(j, state).is_zero() for j in range(1, bound + 1))
