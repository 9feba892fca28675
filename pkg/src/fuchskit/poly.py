"""Dense univariate polynomials with exact rational coefficients.

Coefficients are stored lowest-degree first.  The zero polynomial has an
empty coefficient tuple and degree -1 (standing in for -infinity).  All
operations are pure; instances are immutable.

Multiplication switches to Kronecker substitution (packing integer
coefficients into one big integer) once operands are large, which keeps the
high symmetric-power pipelines fast.
"""

from __future__ import annotations

import math

from .errors import ZeroPolynomial
from .qnum import ONE, Q, ZERO, lcd, qq


def _trim(coeffs):
    n = len(coeffs)
    while n and coeffs[n - 1] == 0:
        n -= 1
    return tuple(coeffs[:n])


class Polynomial:
    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        self.coeffs = _trim([qq(c) for c in coeffs])

    @staticmethod
    def _raw(trimmed_tuple):
        p = object.__new__(Polynomial)
        p.coeffs = trimmed_tuple
        return p

    @staticmethod
    def zero():
        return Polynomial._raw(())

    @staticmethod
    def one():
        return Polynomial._raw((ONE,))

    @staticmethod
    def constant(c):
        c = qq(c)
        return Polynomial._raw((c,) if c != 0 else ())

    @staticmethod
    def x():
        return Polynomial._raw((ZERO, ONE))

    @staticmethod
    def monomial(n, c=1):
        c = qq(c)
        if c == 0:
            return Polynomial.zero()
        return Polynomial._raw((ZERO,) * n + (c,))

    # -- basic structure -------------------------------------------------

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    @property
    def lead(self):
        if not self.coeffs:
            return ZERO
        return self.coeffs[-1]

    def coefficient(self, k):
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return ZERO

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, type(ZERO))):
            return self == Polynomial.constant(other)
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    # -- ring operations -------------------------------------------------

    def __add__(self, other):
        other = _coerce(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Polynomial._raw(_trim(out))

    __radd__ = __add__

    def __neg__(self):
        return Polynomial._raw(tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        return self + (-_coerce(other))

    def __rsub__(self, other):
        return _coerce(other) + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, type(ZERO))):
            c = qq(other)
            if c == 0:
                return Polynomial.zero()
            return Polynomial._raw(tuple(x * c for x in self.coeffs))
        other = _coerce(other)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Polynomial.zero()
        if min(len(a), len(b)) >= 24:
            return Polynomial._raw(_trim(_mul_kronecker(a, b)))
        out = [ZERO] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x == 0:
                continue
            for j, y in enumerate(b):
                out[i + j] += x * y
        return Polynomial._raw(_trim(out))

    __rmul__ = __mul__

    def __pow__(self, n):
        if n < 0:
            raise ValueError("negative power of a polynomial")
        out = Polynomial.one()
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def scale(self, c):
        return self * c

    def shift_up(self, k):
        """Multiply by x**k."""
        if not self.coeffs:
            return self
        return Polynomial._raw((ZERO,) * k + self.coeffs)

    def divmod(self, other):
        other = _coerce(other)
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        a = list(self.coeffs)
        db, lb = other.degree, other.lead
        if self.degree < db:
            return Polynomial.zero(), self
        quot = [ZERO] * (self.degree - db + 1)
        for k in range(self.degree - db, -1, -1):
            c = a[k + db] / lb
            if c != 0:
                quot[k] = c
                for j, bc in enumerate(other.coeffs):
                    a[k + j] -= c * bc
        return Polynomial._raw(_trim(quot)), Polynomial._raw(_trim(a[:db]))

    def __floordiv__(self, other):
        return self.divmod(other)[0]

    def __mod__(self, other):
        return self.divmod(other)[1]

    def exact_div(self, other):
        q, r = self.divmod(other)
        if not r.is_zero():
            raise ValueError(f"{self} is not divisible by {other}")
        return q

    def divides(self, other) -> bool:
        if self.is_zero():
            return other.is_zero() if isinstance(other, Polynomial) else False
        return (_coerce(other) % self).is_zero()

    # -- calculus and evaluation ------------------------------------------

    def derivative(self):
        return Polynomial._raw(
            _trim([self.coeffs[i] * i for i in range(1, len(self.coeffs))])
        )

    def __call__(self, point):
        """Horner evaluation; point may be rational or any ring element."""
        if not self.coeffs:
            return ZERO if isinstance(point, (int, type(ZERO))) else point * 0
        acc = self.coeffs[-1]
        if not isinstance(point, (int, type(ZERO))):
            acc = point * 0 + acc
        for c in reversed(self.coeffs[:-1]):
            acc = acc * point + c
        return acc

    def monic(self):
        if self.is_zero():
            return self
        lb = self.lead
        if lb == 1:
            return self
        return Polynomial._raw(tuple(c / lb for c in self.coeffs))

    def reverse(self):
        """Coefficient reversal: x**deg * p(1/x)."""
        return Polynomial._raw(_trim(tuple(reversed(self.coeffs))))

    # -- printing ----------------------------------------------------------

    def __repr__(self):
        return f"Polynomial({self!s})"

    def __str__(self):
        from .qnum import qstr

        if not self.coeffs:
            return "0"
        parts = []
        for k in range(self.degree, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if k == 0:
                body = qstr(mag)
            else:
                xs = "x" if k == 1 else f"x^{k}"
                body = xs if mag == 1 else f"{qstr(mag)}*{xs}"
            parts.append((sign, body))
        head_sign, head = parts[0]
        text = ("-" if head_sign == "-" else "") + head
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text


def _coerce(value) -> Polynomial:
    if isinstance(value, Polynomial):
        return value
    return Polynomial.constant(value)


# -- integer helpers for fast multiplication and gcd ------------------------


def _to_int_poly(coeffs):
    """Clear denominators: returns (int coefficient list, denominator)."""
    den = lcd(coeffs)
    return [int(c * den) for c in coeffs], den


def _mul_kronecker(a, b):
    ia, da = _to_int_poly(a)
    ib, db = _to_int_poly(b)
    max_a = max(abs(c) for c in ia)
    max_b = max(abs(c) for c in ib)
    bound = max_a * max_b * min(len(ia), len(ib))
    bits = bound.bit_length() + 2
    packed = _pack(ia, bits) * _pack(ib, bits)
    out_len = len(ia) + len(ib) - 1
    ints = _unpack(packed, bits, out_len)
    den = da * db
    return [Q(c, den) for c in ints]


def _pack(ints, bits):
    """Evaluate the integer polynomial at 2**bits (Kronecker packing)."""
    x = 1 << bits
    acc = 0
    for c in reversed(ints):
        acc = acc * x + c
    return acc


def _unpack(value, bits, out_len):
    x = 1 << bits
    half = x >> 1
    out = []
    for _ in range(out_len):
        digit = value & (x - 1)
        if digit >= half:
            digit -= x
        out.append(digit)
        value = (value - digit) >> bits
    return out


def _int_content(ints):
    g = 0
    for c in ints:
        g = math.gcd(g, abs(c))
        if g == 1:
            return 1
    return g


def _int_primitive(ints):
    g = _int_content(ints)
    if g in (0, 1):
        return list(ints)
    return [c // g for c in ints]


def _int_gcd(a, b):
    """Primitive-PRS gcd of two integer coefficient lists (nonzero)."""
    a = _int_primitive(a)
    b = _int_primitive(b)
    if len(a) < len(b):
        a, b = b, a
    while True:
        if len(b) == 0:
            return a
        if len(b) == 1:
            return [1]
        # pseudo-remainder of a by b
        r = list(a)
        lb = b[-1]
        db = len(b) - 1
        da = len(r) - 1
        if da < db:
            a, b = b, r
            continue
        r = [c * lb ** (da - db + 1) for c in r]
        for k in range(da - db, -1, -1):
            c = r[k + db]
            if c:
                q, rem = divmod(c, lb)
                assert rem == 0
                for j, bc in enumerate(b):
                    r[k + j] -= q * bc
        while r and r[-1] == 0:
            r.pop()
        a = b
        b = _int_primitive(r) if r else []


def poly_gcd(a: Polynomial, b: Polynomial) -> Polynomial:
    """Monic greatest common divisor over the rationals."""
    a, b = _coerce(a), _coerce(b)
    if a.is_zero():
        return b.monic()
    if b.is_zero():
        return a.monic()
    ia, _ = _to_int_poly(a.coeffs)
    ib, _ = _to_int_poly(b.coeffs)
    g = _int_gcd(ia, ib)
    return Polynomial(g).monic()


def poly_lcm(a: Polynomial, b: Polynomial) -> Polynomial:
    if a.is_zero() or b.is_zero():
        return Polynomial.zero()
    return (a * b).exact_div(poly_gcd(a, b)).monic()


def squarefree_factor(a: Polynomial):
    """Yun's algorithm: list of (monic squarefree factor, multiplicity).

    Factors are pairwise coprime and their product (with multiplicity),
    times the content, reassembles the input.
    """
    a = _coerce(a)
    if a.is_zero():
        raise ZeroPolynomial("cannot factor the zero polynomial")
    a = a.monic()
    if a.degree == 0:
        return []
    out = []
    da = a.derivative()
    g = poly_gcd(a, da)
    c = a.exact_div(g)
    d = da.exact_div(g) - c.derivative()
    m = 1
    while c.degree > 0:
        f = poly_gcd(c, d)
        if f.degree > 0:
            out.append((f.monic(), m))
        c = c.exact_div(f)
        d = d.exact_div(f) - c.derivative()
        m += 1
    return out


def _root_bound(coeffs) -> int:
    """Fujiwara-style bound on |roots| of an integer polynomial, computed
    via bit lengths so huge coefficients never hit float range."""
    n = len(coeffs) - 1
    lead_bits = abs(coeffs[-1]).bit_length()
    bound = 1
    for k in range(1, n + 1):
        c = abs(coeffs[n - k])
        if c:
            # |c/lead|^(1/k) <= 2^ceil((bits(c) - bits(lead) + 1) / k)
            exp = max(0, -(-(c.bit_length() - lead_bits + 1) // k))
            bound = max(bound, 1 << exp)
    return 2 * bound + 1


def integer_roots(a: Polynomial):
    """All integer roots with exact multiplicities, sorted ascending."""
    return [(r, m) for r, m in rational_roots(a) if r.denominator == 1]


def _int_eval(ints, x):
    acc = 0
    for c in reversed(ints):
        acc = acc * x + c
    return acc


def rational_roots(a: Polynomial):
    """All rational roots with exact multiplicities, sorted ascending.

    Candidates p/q with p dividing the trailing and q the leading
    coefficient of the primitive integer form, pruned by a root bound.
    """
    a = _coerce(a)
    if a.is_zero():
        raise ZeroPolynomial("root-finding on the zero polynomial")
    ints, _ = _to_int_poly(a.coeffs)
    out = []
    v = 0
    while ints and ints[0] == 0:
        ints.pop(0)
        v += 1
    if v:
        out.append((Q(0), v))
    if len(ints) <= 1:
        out.sort(key=lambda t: t[0])
        return out
    ints = _int_primitive(ints)
    lead = ints[-1]
    # y = lead*x turns p(x) into the monic integer polynomial b(y), whose
    # rational roots are integers; find those mod a good prime and lift.
    n = len(ints) - 1
    b = [ints[i] * lead ** (n - 1 - i) for i in range(n)] + [1]
    poly = Polynomial(ints)
    for y0 in _monic_integer_roots(b):
        cand = Q(y0, lead)
        if poly(cand) == 0:
            mult = 1
            lin = Polynomial([-cand, ONE])
            rest = poly.exact_div(lin)
            while rest(cand) == 0:
                mult += 1
                rest = rest.exact_div(lin)
            out.append((cand, mult))
    out.sort(key=lambda t: t[0])
    return out


def _monic_integer_roots(b):
    """Integer roots of a monic integer polynomial with nonzero trailing
    coefficient (no multiplicities, unsorted).

    Roots of the squarefree part are located mod a prime p at which the
    reduction stays squarefree, then Hensel-lifted past the Fujiwara bound;
    candidates are confirmed by exact evaluation, so the method is exact.
    """
    bsf = _int_squarefree_part(b)
    degree = len(bsf) - 1
    if degree == 0:
        return []
    if degree == 1:
        r = -bsf[0]
        return [r] if _int_eval(b, r) == 0 else []
    bound = _root_bound(bsf)
    deriv = [bsf[i] * i for i in range(1, len(bsf))]
    p = 3
    while True:
        p = _next_prime(p)
        red = [c % p for c in bsf]
        dred = [c % p for c in deriv]
        if _gf_gcd_is_one(red, dred, p):
            break
    roots_mod_p = [r for r in range(p) if _int_eval(red, r) % p == 0]
    out = []
    for r in roots_mod_p:
        modulus = p
        while modulus <= 2 * bound + 1:
            # Newton step: r <- r - b(r)/b'(r) mod modulus^2
            modulus *= modulus
            inv = pow(_int_eval(deriv, r) % modulus, -1, modulus)
            r = (r - _int_eval(bsf, r) * inv) % modulus
        cand = r if r <= modulus // 2 else r - modulus
        if abs(cand) <= bound and _int_eval(b, cand) == 0:
            out.append(cand)
    return out


def _int_squarefree_part(b):
    """b / gcd(b, b') for an integer polynomial, as a primitive integer
    polynomial with positive leading coefficient."""
    deriv = [b[i] * i for i in range(1, len(b))]
    g = _int_gcd(b, deriv)
    if len(g) <= 1:
        part = list(b)
    else:
        quot, rem = Polynomial(b).divmod(Polynomial(g))
        assert rem.is_zero()
        part = [int(c) for c in quot.coeffs]
    part = _int_primitive(part)
    if part[-1] < 0:
        part = [-c for c in part]
    return part


def _next_prime(p: int) -> int:
    cand = p + 2 if p % 2 else p + 1
    while True:
        for d in range(2, _isqrt(cand) + 1):
            if cand % d == 0:
                break
        else:
            return cand
        cand += 2


def _isqrt(n: int) -> int:
    import math

    return math.isqrt(n)


def _gf_gcd_is_one(a, b, p):
    """True when gcd(a, b) = 1 in GF(p)[x] (and a keeps full degree)."""
    a = list(a)
    b = list(b)
    while a and a[-1] % p == 0:
        a.pop()
    while b and b[-1] % p == 0:
        b.pop()
    if not a or not b:
        return False
    while b:
        a, b = b, _gf_mod(a, b, p)
    return len(a) == 1


def _gf_mod(a, b, p):
    a = list(a)
    inv = pow(b[-1], -1, p)
    while len(a) >= len(b):
        factor = a[-1] * inv % p
        if factor:
            shift = len(a) - len(b)
            for i, c in enumerate(b):
                a[shift + i] = (a[shift + i] - factor * c) % p
        a.pop()
    while a and a[-1] % p == 0:
        a.pop()
    return a




def resultant(a: Polynomial, b: Polynomial):
    """Resultant of two rational polynomials (exact, via Euclidean PRS)."""
    a, b = _coerce(a), _coerce(b)
    if a.is_zero() or b.is_zero():
        return ZERO
    res = ONE
    while True:
        da, db = a.degree, b.degree
        if db == 0:
            return res * b.lead**da
        r = a % b
        if r.is_zero():
            return ZERO
        res *= b.lead ** (da - r.degree) * (-1) ** (da * db)
        a, b = b, r
