from fractions import Fraction
from dataclasses import dataclass
import json

"""
Exact rational divisor classes on the moduli space of stable n-pointed genus-g
curves.

A divisor class is a finite Q-linear combination of the standard generators:
lambda, the cotangent classes psi_1..psi_n, the irreducible boundary class
delta_0, and the reducible boundary classes delta_{i:S} indexed by a genus
0 <= i <= g and a subset S of the marked points.  The pair (i, S) and its
mirror (g - i, S^c) name the same class; every class is stored under a single
canonical representative.  All coefficients are Fraction; there is no floating
point anywhere in this package.
"""


class PicError(Exception):
    pass


class InvalidBoundary(PicError):
    pass


class BaseMismatch(PicError):
    pass


class NotGenus2(PicError):
    pass


class UnknownCurve(PicError):
    pass


class ParamOutOfRange(PicError):
    pass


@dataclass(frozen=True)
class ModuliBase:
    """The pair (g, n) naming a moduli space of stable pointed curves."""

    g: int
    n: int

    def __post_init__(self):
        if self.g < 2:
            raise ParamOutOfRange("genus must be at least 2, got %r" % (self.g,))
        if self.n < 0:
            raise ParamOutOfRange("number of marked points must be nonnegative")

    def labels(self):
        return range(1, self.n + 1)

    def __str__(self):
        return "(%d,%d)" % (self.g, self.n)


@dataclass(frozen=True)
class BoundaryIndex:
    """Canonical index (i, S) of a reducible boundary class delta_{i:S}."""

    i: int
    S: frozenset

    def sorted_S(self):
        return sorted(self.S)

    def __str__(self):
        if not self.S:
            return "delta_%d" % self.i
        return "delta_{%d:{%s}}" % (self.i, ",".join(map(str, self.sorted_S())))

    # lexicographic on (i, sorted members); used for deterministic output
    def sort_key(self):
        return (self.i, self.sorted_S())

    def __lt__(self, other):
        return self.sort_key() < other.sort_key()


def _raw_valid(base, i, S):
    # a raw pair is valid when each side of the corresponding degeneration is stable
    if i == 0 and len(S) < 2:
        return False
    if i == base.g and len(S) > base.n - 2:
        return False
    return True


def try_canonical_index(base, i, S):
    """Canonical representative of (i, S), or None when the pair does not name
    a boundary class (genus out of range or an unstable side).  Used by formula
    code that treats such pairs as zero."""
    S = frozenset(S)
    if i < 0 or i > base.g or not S <= frozenset(base.labels()):
        return None
    if not _raw_valid(base, i, S):
        return None
    if base.n >= 1:
        if 1 in S:
            return BoundaryIndex(i, S)
        return BoundaryIndex(base.g - i, frozenset(base.labels()) - S)
    if 2 * i <= base.g:
        return BoundaryIndex(i, S)
    return BoundaryIndex(base.g - i, S)


def canonical_index(base, i, S):
    """Canonical representative of the boundary class delta_{i:S}.

    The mirror pair (g - i, S^c) names the same class; the canonical
    representative contains the first marked point when n >= 1 and has
    i <= g/2 when n = 0.  Raises InvalidBoundary for pairs that do not
    name a class.
    """
    key = try_canonical_index(base, i, S)
    if key is None:
        raise InvalidBoundary(
            "delta_{%d:%s} is not a boundary class on %s" % (i, sorted(S), base)
        )
    return key


def mirror_index(base, key):
    """The non-canonical mirror representative of a canonical key."""
    return (base.g - key.i, frozenset(base.labels()) - key.S)


def enumerate_boundary(base):
    """All canonical boundary keys of the base, sorted."""
    out = set()
    labels = sorted(base.labels())
    for mask in range(1 << base.n):
        S = frozenset(labels[t] for t in range(base.n) if mask >> t & 1)
        for i in range(base.g + 1):
            key = try_canonical_index(base, i, S)
            if key is not None:
                out.add(key)
    return sorted(out)


def _frac(x):
    if isinstance(x, Fraction):
        return x
    return Fraction(x)


class DivisorClass:
    """An exact rational divisor class on a fixed base (g, n).

    Instances are immutable; all arithmetic returns new objects.  Boundary
    coefficients are stored sparsely on canonical keys with zeros pruned.
    """

    __slots__ = ("base", "lam", "psi", "delta0", "boundary")

    def __init__(self, base, lam=0, psi=None, delta0=0, boundary=None):
        object.__setattr__(self, "base", base)
        object.__setattr__(self, "lam", _frac(lam))
        if psi is None:
            psi = [0] * base.n
        psi = tuple(_frac(c) for c in psi)
        if len(psi) != base.n:
            raise BaseMismatch(
                "expected %d psi coefficients, got %d" % (base.n, len(psi))
            )
        object.__setattr__(self, "psi", psi)
        object.__setattr__(self, "delta0", _frac(delta0))
        acc = {}
        if boundary:
            items = boundary.items() if isinstance(boundary, dict) else boundary
            for raw, c in items:
                c = _frac(c)
                if c == 0:
                    continue
                if isinstance(raw, BoundaryIndex):
                    key = canonical_index(base, raw.i, raw.S)
                else:
                    i, S = raw
                    key = canonical_index(base, i, S)
                c2 = acc.get(key, Fraction(0)) + c
                if c2 == 0:
                    acc.pop(key, None)
                else:
                    acc[key] = c2
        object.__setattr__(self, "boundary", acc)

    def __setattr__(self, name, value):
        raise AttributeError("DivisorClass is immutable")

    def coeff(self, key):
        return self.boundary.get(key, Fraction(0))

    def delta(self, i, S):
        """Coefficient of delta_{i:S} (any representative)."""
        return self.coeff(canonical_index(self.base, i, S))

    def is_zero(self):
        return (
            self.lam == 0
            and all(c == 0 for c in self.psi)
            and self.delta0 == 0
            and not self.boundary
        )

    def _check(self, other):
        if not isinstance(other, DivisorClass):
            raise BaseMismatch("cannot combine DivisorClass with %r" % (other,))
        if self.base != other.base:
            raise BaseMismatch(
                "base mismatch: %s vs %s" % (self.base, other.base)
            )

    def __add__(self, other):
        self._check(other)
        acc = dict(self.boundary)
        for k, c in other.boundary.items():
            c2 = acc.get(k, Fraction(0)) + c
            if c2 == 0:
                acc.pop(k, None)
            else:
                acc[k] = c2
        out = DivisorClass(
            self.base,
            self.lam + other.lam,
            [a + b for a, b in zip(self.psi, other.psi)],
            self.delta0 + other.delta0,
        )
        object.__setattr__(out, "boundary", acc)
        return out

    def __neg__(self):
        return self * -1

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, c):
        c = _frac(c)
        if c == 0:
            return DivisorClass(self.base)
        out = DivisorClass(
            self.base,
            self.lam * c,
            [a * c for a in self.psi],
            self.delta0 * c,
        )
        object.__setattr__(out, "boundary", {k: v * c for k, v in self.boundary.items()})
        return out

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, DivisorClass) or self.base != other.base:
            return NotImplemented
        return equals(self, other)

    def __hash__(self):
        return hash((self.base, self.lam, self.psi, self.delta0))

    def __repr__(self):
        return "DivisorClass(%s, %s)" % (self.base, to_latex_expr(self))


def zero_class(base):
    return DivisorClass(base)


def relabel(a, perm):
    """Apply a marked-point relabeling to a class.

    ``perm`` maps each old label to its new label (a dict or sequence of the
    new labels in old-label order); must be a bijection of {1..n}.
    """
    base = a.base
    if not isinstance(perm, dict):
        perm = {j + 1: p for j, p in enumerate(perm)}
    if sorted(perm) != list(base.labels()) or sorted(perm.values()) != list(base.labels()):
        raise ParamOutOfRange("relabeling must permute {1..%d}" % base.n)
    psi = [Fraction(0)] * base.n
    for j in base.labels():
        psi[perm[j] - 1] = a.psi[j - 1]
    bnd = [
        ((k.i, frozenset(perm[s] for s in k.S)), c) for k, c in a.boundary.items()
    ]
    return DivisorClass(base, a.lam, psi, a.delta0, bnd)


def normalize_genus2(a):
    """Eliminate lambda on a genus-2 base using the relation
    lambda = (1/10) delta_0 + (1/5) sum_{1 in S or S empty} delta_{1:S}."""
    if a.base.g != 2:
        raise NotGenus2("normalization applies only to genus 2, base is %s" % a.base)
    if a.lam == 0:
        return a
    c = a.lam
    base = a.base
    extra = {}
    labels = sorted(base.labels())
    rest = labels[1:] if base.n >= 1 else []
    for mask in range(1 << len(rest)):
        S = {rest[t] for t in range(len(rest)) if mask >> t & 1}
        if base.n >= 1:
            S.add(1)
        extra[(1, frozenset(S))] = c / 5
    out = DivisorClass(base, 0, a.psi, a.delta0 + c / 10, extra)
    acc = dict(out.boundary)
    for k, v in a.boundary.items():
        v2 = acc.get(k, Fraction(0)) + v
        if v2 == 0:
            acc.pop(k, None)
        else:
            acc[k] = v2
    object.__setattr__(out, "boundary", acc)
    return out


def equals(a, b):
    """Exact equality of divisor classes.  On a genus-2 base both sides are
    normalized first, since lambda is not independent there."""
    if not isinstance(a, DivisorClass) or not isinstance(b, DivisorClass):
        raise BaseMismatch("equals expects two DivisorClass values")
    if a.base != b.base:
        raise BaseMismatch("base mismatch: %s vs %s" % (a.base, b.base))
    if a.base.g == 2:
        a = normalize_genus2(a)
        b = normalize_genus2(b)
    return (
        a.lam == b.lam
        and a.psi == b.psi
        and a.delta0 == b.delta0
        and a.boundary == b.boundary
    )


def diff_first(a, b):
    """First generator (in output order) where two classes differ, with both
    coefficients; None when the classes are equal.  Genus 2 normalizes first."""
    if a.base != b.base:
        raise BaseMismatch("base mismatch: %s vs %s" % (a.base, b.base))
    if a.base.g == 2:
        a = normalize_genus2(a)
        b = normalize_genus2(b)
    if a.lam != b.lam:
        return ("lambda", a.lam, b.lam)
    for j in a.base.labels():
        if a.psi[j - 1] != b.psi[j - 1]:
            return ("psi_%d" % j, a.psi[j - 1], b.psi[j - 1])
    if a.delta0 != b.delta0:
        return ("delta_0", a.delta0, b.delta0)
    for key in sorted(set(a.boundary) | set(b.boundary)):
        if a.coeff(key) != b.coeff(key):
            return (str(key), a.coeff(key), b.coeff(key))
    return None


# ---------------------------------------------------------------------------
# one-dimensional test families and intersection pairing

class TestCurve:
    """A curve class in the moduli space, recorded through its intersection
    numbers with the divisor generators (a sparse pairing vector)."""

    def __init__(self, base, name, pairing):
        self.base = base
        self.name = name
        vec = {}
        for k, c in (pairing.items() if isinstance(pairing, dict) else pairing):
            c = _frac(c)
            if c == 0:
                continue
            if isinstance(k, tuple) and k and k[0] == "psi":
                pass
            elif isinstance(k, BoundaryIndex):
                pass
            elif k in ("lambda", "delta0"):
                pass
            else:
                raise UnknownCurve("bad pairing key %r" % (k,))
            vec[k] = vec.get(k, Fraction(0)) + c
        self.pairing = vec

    def __repr__(self):
        return "TestCurve(%s, %s)" % (self.name, self.base)


def pair(curve, a):
    """Exact intersection number of a test curve with a divisor class."""
    if curve.base != a.base:
        raise BaseMismatch("base mismatch: %s vs %s" % (curve.base, a.base))
    total = Fraction(0)
    for k, c in curve.pairing.items():
        if k == "lambda":
            total += c * a.lam
        elif k == "delta0":
            total += c * a.delta0
        elif isinstance(k, BoundaryIndex):
            total += c * a.coeff(k)
        else:
            total += c * a.psi[k[1] - 1]
    return total


def builtin_test_curve(name, base, i=None, n=None):
    """Standard one-parameter families used by the verification suite.

    On (g, 1): "A" (moving point on a fixed curve), "B" (elliptic bridge
    sliding, needs 0 < i < g-1), "C" (genus-i tail through the point,
    1 <= i <= g-1), "D" (pencil attached at the point), "E" (elliptic tail
    pencil).  On (g, g): "Bin" (sliding node with n of the g points on one
    side, needs i and n).
    """
    g = base.g

    def key(ii, S):
        return canonical_index(base, ii, S)

    if name == "A":
        if base.n != 1:
            raise UnknownCurve("curve A lives on a 1-pointed base")
        return TestCurve(base, "A", {("psi", 1): 2 * g - 2})
    if name == "B":
        if base.n != 1:
            raise UnknownCurve("curve B lives on a 1-pointed base")
        if i is None or not 0 < i < g - 1:
            raise ParamOutOfRange("curve B needs 0 < i < g-1")
        return TestCurve(base, "B_%d" % i, {key(i, {1}): 2 - 2 * (g - i)})
    if name == "C":
        if base.n != 1:
            raise UnknownCurve("curve C lives on a 1-pointed base")
        if i is None or not 1 <= i <= g - 1:
            raise ParamOutOfRange("curve C needs 1 <= i <= g-1")
        vec = {("psi", 1): 2 * i - 1}
        for kk, c in ((key(i, {1}), -1), (key(g - i, {1}), 1)):
            vec[kk] = vec.get(kk, 0) + c
        return TestCurve(base, "C_%d" % i, vec)
    if name == "D":
        if base.n != 1:
            raise UnknownCurve("curve D lives on a 1-pointed base")
        return TestCurve(
            base, "D", {("psi", 1): 1, "delta0": 2 - 2 * g, key(g - 1, {1}): 1}
        )
    if name == "E":
        if base.n != 1:
            raise UnknownCurve("curve E lives on a 1-pointed base")
        return TestCurve(base, "E", {"lambda": 1, "delta0": 12, key(g - 1, {1}): -1})
    if name == "Bin":
        if base.n != g:
            raise UnknownCurve("curve Bin lives on a g-pointed base")
        if i is None or n is None or not 1 <= i <= g - 1 or not i <= n <= g:
            raise ParamOutOfRange("curve Bin needs 1 <= i <= g-1 and i <= n <= g")
        # the attachment point moves on the side carrying the last g-n marked
        # points; colliding with each of them contributes one psi degree and
        # one extra boundary degree
        vec = {key(i, set(range(1, n + 1))): 2 - 2 * (g - i) - (g - n)}
        for extra in range(n + 1, g + 1):
            vec[("psi", extra)] = vec.get(("psi", extra), 0) + 1
            k2 = key(i, set(range(1, n + 1)) | {extra})
            vec[k2] = vec.get(k2, 0) + 1
        return TestCurve(base, "B_{%d,%d}" % (i, n), vec)
    raise UnknownCurve("unknown test curve %r" % (name,))


# ---------------------------------------------------------------------------
# serialization

def _fstr(x):
    return str(Fraction(x))


def to_json_dict(a):
    return {
        "g": a.base.g,
        "n": a.base.n,
        "lambda": _fstr(a.lam),
        "psi": [_fstr(c) for c in a.psi],
        "delta0": _fstr(a.delta0),
        "boundary": [
            {"i": k.i, "S": k.sorted_S(), "c": _fstr(a.boundary[k])}
            for k in sorted(a.boundary)
        ],
    }


def to_json(a):
    return json.dumps(to_json_dict(a), separators=(",", ":"), sort_keys=False)


def from_json_dict(d):
    base = ModuliBase(d["g"], d["n"])
    return DivisorClass(
        base,
        Fraction(d["lambda"]),
        [Fraction(c) for c in d["psi"]],
        Fraction(d["delta0"]),
        [((e["i"], frozenset(e["S"])), Fraction(e["c"])) for e in d["boundary"]],
    )


def from_json(s):
    return from_json_dict(json.loads(s))


def _rows(a):
    yield ("lambda", a.lam)
    for j in a.base.labels():
        yield ("psi_%d" % j, a.psi[j - 1])
    yield ("delta_0", a.delta0)
    for k in sorted(a.boundary):
        yield (str(k), a.boundary[k])


def to_csv(a):
    lines = ["generator,coefficient"]
    for name, c in _rows(a):
        lines.append('%s,%s' % (name, _fstr(c)))
    return "\n".join(lines) + "\n"


def _latex_frac(c):
    c = Fraction(c)
    if c.denominator == 1:
        return str(c.numerator)
    s = "-" if c < 0 else ""
    return r"%s\tfrac{%d}{%d}" % (s, abs(c.numerator), c.denominator)


def _latex_gen(name, key=None):
    if name == "lambda":
        return r"\lambda"
    if name == "delta_0":
        return r"\delta_{0}"
    if name.startswith("psi_"):
        return r"\psi_{%s}" % name[4:]
    if not key.S:
        return r"\delta_{%d}" % key.i
    return r"\delta_{%d:\{%s\}}" % (key.i, ",".join(map(str, key.sorted_S())))


def to_latex_expr(a):
    """The class as a one-line LaTeX linear combination."""
    terms = []
    gens = [("lambda", None, a.lam)]
    gens += [("psi_%d" % j, None, a.psi[j - 1]) for j in a.base.labels()]
    gens += [("delta_0", None, a.delta0)]
    gens += [("", k, a.boundary[k]) for k in sorted(a.boundary)]
    for name, key, c in gens:
        if c == 0:
            continue
        sym = _latex_gen(name, key) if key is None else _latex_gen("", key)
        mag = abs(c)
        body = sym if mag == 1 else _latex_frac(mag) + sym
        if not terms:
            terms.append(("-" if c < 0 else "") + body)
        else:
            terms.append(("- " if c < 0 else "+ ") + body)
    if not terms:
        return "0"
    return " ".join(terms)


def to_latex(a):
    """The class as a LaTeX coefficient table, one row per generator."""
    lines = [r"\begin{tabular}{ll}", r"generator & coefficient \\"]
    for name, c in _rows(a):
        lines.append(r"$%s$ & $%s$ \\" % (_latex_row_symbol(a, name), _latex_frac(c)))
    lines.append(r"\end{tabular}")
    return "\n".join(lines) + "\n"


def _latex_row_symbol(a, name):
    if name in ("lambda", "delta_0") or name.startswith("psi_"):
        return _latex_gen(name)
    for k in a.boundary:
        if str(k) == name:
            return _latex_gen("", k)
    return name
