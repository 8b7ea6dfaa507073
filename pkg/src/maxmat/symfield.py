"""Exact symbolic fields over spacetime ``(t, x, y, z)``.

A :class:`SymScalar` is a finite sum ``poly * atom`` where ``poly`` is a
polynomial with Gaussian-rational coefficients and ``atom`` is ``1``,
``cos(L)`` or ``sin(L)`` for a linear phase ``L = k.x - omega t``. The class is
closed under addition, multiplication (trig products are rewritten with
product-to-sum identities) and partial differentiation, and every value is
kept in a unique normal form so that zero-testing is a dictionary check.

Vectors are plain sequences of scalars and matrices are 4x4 ``dtype=object``
numpy arrays, so the generic builders in :mod:`maxmat.faraday` apply to
symbolic entries unchanged.
"""

from __future__ import annotations

import contextlib
import contextvars
import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .linalg import APPROX, EXACT, Gaussian, ModeError, _rat, format_gaussian, format_rational

VARS = ("t", "x", "y", "z")
DEFAULT_TERM_LIMIT = 10**6

_SHIFT = (48, 32, 16, 0)
_MASK = 0xFFFF
_MAX_EXP = _MASK

_term_limit = contextvars.ContextVar("term_limit", default=DEFAULT_TERM_LIMIT)


class ResourceLimitError(RuntimeError):
    """A symbolic result grew beyond the configured term limit."""


@contextlib.contextmanager
def term_limit(n: int):
    """Temporarily change the maximum number of terms a result may hold."""
    token = _term_limit.set(int(n))
    try:
        yield
    finally:
        _term_limit.reset(token)


def get_term_limit() -> int:
    return _term_limit.get()


def _var_index(var) -> int:
    if isinstance(var, int):
        if not 0 <= var < 4:
            raise ValueError(f"variable index {var} out of range")
        return var
    try:
        return VARS.index(var)
    except ValueError:
        raise ValueError(f"unknown variable {var!r}; expected one of {VARS}") from None


def _pack(exps) -> int:
    exps = tuple(int(e) for e in exps)
    if len(exps) != 4 or any(e < 0 or e > _MAX_EXP for e in exps):
        raise ValueError(f"invalid exponent tuple {exps}")
    return (exps[0] << 48) | (exps[1] << 32) | (exps[2] << 16) | exps[3]


def _unpack(key: int) -> tuple[int, int, int, int]:
    return tuple((key >> s) & _MASK for s in _SHIFT)


@dataclass(frozen=True, order=True)
class LinPhase:
    """Phase ``L = k1 x + k2 y + k3 z - omega t`` with rational coefficients."""

    omega: object
    k1: object = 0
    k2: object = 0
    k3: object = 0

    def __post_init__(self):
        for name in ("omega", "k1", "k2", "k3"):
            object.__setattr__(self, name, _rat(getattr(self, name)))

    @property
    def params(self) -> tuple:
        return (self.omega, self.k1, self.k2, self.k3)

    def coefficient(self, var) -> object:
        """``dL/d var``."""
        i = _var_index(var)
        return -self.omega if i == 0 else self.params[i]

    def is_zero(self) -> bool:
        return not any(self.params)

    def is_canonical(self) -> bool:
        lead = next((c for c in self.params if c != 0), 0)
        return lead > 0

    def __neg__(self):
        return LinPhase(*(-c for c in self.params))

    def __add__(self, other):
        return LinPhase(*(a + b for a, b in zip(self.params, other.params)))

    def __sub__(self, other):
        return LinPhase(*(a - b for a, b in zip(self.params, other.params)))

    def scaled(self, n):
        return LinPhase(*(c * n for c in self.params))

    def value(self, event):
        t, x, y, z = event
        return self.k1 * x + self.k2 * y + self.k3 * z - self.omega * t

    def __str__(self):
        parts = []
        for var, c in zip(VARS, (self.coefficient(v) for v in VARS)):
            if c == 0:
                continue
            mag = abs(c)
            body = var if mag == 1 else f"{format_rational(mag)}*{var}"
            if not parts:
                parts.append(body if c > 0 else "-" + body)
            else:
                parts.append(("+ " if c > 0 else "- ") + body)
        return " ".join(parts) if parts else "0"


def _atom(kind: str, phase: LinPhase):
    """Normalize ``kind(phase)`` to ``(sign, key)``; ``None`` means identically zero."""
    if phase.is_zero():
        return (1, None) if kind == "cos" else None
    if phase.is_canonical():
        return 1, (kind, phase)
    return (1 if kind == "cos" else -1), (kind, -phase)


_HALF = Fraction(1, 2)


def _atom_product(k1, k2):
    """Expand ``atom1 * atom2`` into ``[(coef, kind, phase) | (coef, None, None)]``."""
    if k1 is None and k2 is None:
        return [(1, None, None)]
    if k1 is None:
        return [(1, k2[0], k2[1])]
    if k2 is None:
        return [(1, k1[0], k1[1])]
    (ka, a), (kb, b) = k1, k2
    if ka == "cos" and kb == "cos":
        return [(_HALF, "cos", a - b), (_HALF, "cos", a + b)]
    if ka == "sin" and kb == "sin":
        return [(_HALF, "cos", a - b), (-_HALF, "cos", a + b)]
    if ka == "sin":
        return [(_HALF, "sin", a + b), (_HALF, "sin", a - b)]
    return [(_HALF, "sin", a + b), (-_HALF, "sin", a - b)]


# polynomial helpers: dict packed-exponent -> Gaussian -----------------------

def _padd(dst: dict, src: dict, factor=1):
    for e, c in src.items():
        v = c * factor if factor != 1 else c
        if e in dst:
            s = dst[e] + v
            if s:
                dst[e] = s
            else:
                del dst[e]
        elif v:
            dst[e] = v


def _max_exps(p: dict) -> tuple[int, ...]:
    return tuple(max(((e >> s) & _MASK for e in p), default=0) for s in _SHIFT)


def _pmul(p: dict, q: dict, limit: int) -> dict:
    # packed keys add per variable only while no exponent overflows its field
    if any(a + b > _MAX_EXP for a, b in zip(_max_exps(p), _max_exps(q))):
        raise ResourceLimitError(f"symbolic product exceeds degree {_MAX_EXP} in one variable")
    out: dict = {}
    for ea, ca in p.items():
        for eb, cb in q.items():
            e = ea + eb
            v = ca * cb
            if e in out:
                out[e] = out[e] + v
            else:
                out[e] = v
        if len(out) > limit:
            raise ResourceLimitError(f"symbolic product exceeds {limit} terms")
    return {e: c for e, c in out.items() if c}


def _pdiff(p: dict, i: int) -> dict:
    shift = _SHIFT[i]
    step = 1 << shift
    out = {}
    for e, c in p.items():
        n = (e >> shift) & _MASK
        if n:
            out[e - step] = c * n
    return out


def _pscale(p: dict, c) -> dict:
    if not c:
        return {}
    return {e: v * c for e, v in p.items()}


class SymScalar:
    """Exact symbolic scalar field in canonical form."""

    __slots__ = ("_t",)
    is_exact = True

    def __init__(self, terms: dict | None = None):
        self._t = terms if terms is not None else {}
        n = sum(len(p) for p in self._t.values())
        limit = _term_limit.get()
        if n > limit:
            raise ResourceLimitError(f"symbolic value has {n} terms (limit {limit})")

    # construction ----------------------------------------------------------
    @classmethod
    def coerce(cls, value) -> "SymScalar":
        if isinstance(value, SymScalar):
            return value
        return cls.const(value)

    @classmethod
    def const(cls, c) -> "SymScalar":
        c = Gaussian.coerce(c)
        return cls({None: {0: c}} if c else {})

    @classmethod
    def monomial(cls, coef, exps) -> "SymScalar":
        c = Gaussian.coerce(coef)
        return cls({None: {_pack(exps): c}} if c else {})

    @classmethod
    def var(cls, name) -> "SymScalar":
        exps = [0, 0, 0, 0]
        exps[_var_index(name)] = 1
        return cls.monomial(1, exps)

    @classmethod
    def trig(cls, kind: str, phase: LinPhase, poly: "SymScalar | int" = 1) -> "SymScalar":
        """``poly * kind(phase)`` for a polynomial factor ``poly``."""
        if kind not in ("cos", "sin"):
            raise ValueError(f"unknown trig kind {kind!r}")
        poly = cls.coerce(poly)
        if any(k is not None for k in poly._t):
            raise ValueError("trig factor must multiply a pure polynomial")
        at = _atom(kind, phase)
        base = poly._t.get(None, {})
        if at is None or not base:
            return cls()
        sign, key = at
        return cls({key: _pscale(base, sign)})

    @classmethod
    def cos(cls, phase: LinPhase, poly=1) -> "SymScalar":
        return cls.trig("cos", phase, poly)

    @classmethod
    def sin(cls, phase: LinPhase, poly=1) -> "SymScalar":
        return cls.trig("sin", phase, poly)

    # inspection --------------------------------------------------------------
    def is_zero(self) -> bool:
        return not self._t

    def n_terms(self) -> int:
        return sum(len(p) for p in self._t.values())

    def is_polynomial(self) -> bool:
        return all(k is None for k in self._t)

    def is_real(self) -> bool:
        return all(c.im == 0 for p in self._t.values() for c in p.values())

    def degree(self) -> int:
        return max((sum(_unpack(e)) for p in self._t.values() for e in p), default=-1)

    def terms(self):
        """Yield ``(atom_key, exps, coef)`` in canonical order."""
        for key in sorted(self._t, key=_key_order):
            for e in sorted(self._t[key], reverse=True):
                yield key, _unpack(e), self._t[key][e]

    # arithmetic ---------------------------------------------------------------
    def _other(self, other):
        if isinstance(other, SymScalar):
            return other
        if isinstance(other, (float, complex, np.floating, np.complexfloating)):
            raise ModeError("approximate value combined with an exact symbolic field")
        try:
            return SymScalar.const(other)
        except ModeError:
            raise
        except Exception:
            return NotImplemented

    def __add__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        out = {k: dict(p) for k, p in self._t.items()}
        for k, p in o._t.items():
            dst = out.setdefault(k, {})
            _padd(dst, p)
            if not dst:
                del out[k]
        return SymScalar(out)

    __radd__ = __add__

    def __neg__(self):
        return SymScalar({k: _pscale(p, -1) for k, p in self._t.items()})

    def __pos__(self):
        return self

    def __sub__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return self + (-o)

    def __rsub__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return o + (-self)

    def _scale(self, c) -> "SymScalar":
        c = Gaussian.coerce(c)
        if not c:
            return SymScalar()
        return SymScalar({k: _pscale(p, c) for k, p in self._t.items()})

    def __mul__(self, other):
        if not isinstance(other, SymScalar):
            if isinstance(other, (float, complex, np.floating, np.complexfloating)):
                raise ModeError("approximate value combined with an exact symbolic field")
            try:
                return self._scale(other)
            except (ModeError, TypeError, ValueError):
                return NotImplemented
        limit = _term_limit.get()
        out: dict = {}
        for ka, pa in self._t.items():
            for kb, pb in other._t.items():
                prod = _pmul(pa, pb, limit)
                if not prod:
                    continue
                for coef, kind, phase in _atom_product(ka, kb):
                    if kind is None:
                        key, sign = None, 1
                    else:
                        at = _atom(kind, phase)
                        if at is None:
                            continue
                        sign, key = at
                    factor = coef * sign
                    dst = out.setdefault(key, {})
                    _padd(dst, prod, factor)
                    if not dst:
                        del out[key]
                if sum(len(p) for p in out.values()) > limit:
                    raise ResourceLimitError(f"symbolic product exceeds {limit} terms")
        return SymScalar(out)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, SymScalar):
            raise TypeError("division by a symbolic field is not supported")
        c = Gaussian.coerce(other)
        return self._scale(Gaussian(1) / c)

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("only non-negative integer powers")
        out, base = SymScalar.const(1), self
        while n:
            if n & 1:
                out = out * base
            n >>= 1
            if n:
                base = base * base
        return out

    def conjugate(self) -> "SymScalar":
        return SymScalar({k: {e: c.conjugate() for e, c in p.items()} for k, p in self._t.items()})

    def times_i(self) -> "SymScalar":
        return SymScalar({k: {e: c.times_i() for e, c in p.items()} for k, p in self._t.items()})

    def real_part(self) -> "SymScalar":
        return (self + self.conjugate()) * _HALF

    def imag_part(self) -> "SymScalar":
        return (self - self.conjugate()).times_i() * (-_HALF)

    # calculus ------------------------------------------------------------------
    def partial(self, var) -> "SymScalar":
        """Exact partial derivative with respect to ``t``, ``x``, ``y`` or ``z``."""
        i = _var_index(var)
        out: dict = {}

        def acc(key, poly):
            if not poly:
                return
            dst = out.setdefault(key, {})
            _padd(dst, poly)
            if not dst:
                del out[key]

        for key, p in self._t.items():
            acc(key, _pdiff(p, i))
            if key is None:
                continue
            kind, phase = key
            c = phase.coefficient(i)
            if c == 0:
                continue
            if kind == "cos":
                acc(("sin", phase), _pscale(p, -c))
            else:
                acc(("cos", phase), _pscale(p, c))
        return SymScalar(out)

    # evaluation ------------------------------------------------------------------
    def eval(self, event, mode: str = EXACT):
        """Value at ``event = (t, x, y, z)``.

        Exact mode returns a :class:`Gaussian` and only accepts trig atoms whose
        phase vanishes at the event.
        """
        if mode == EXACT:
            ev = tuple(_rat(v) for v in event)
        elif mode == APPROX:
            ev = tuple(float(v) for v in event)
        else:
            raise ValueError(f"unknown mode {mode!r}")
        total = Gaussian(0) if mode == EXACT else 0j
        for key, p in self._t.items():
            pv = Gaussian(0) if mode == EXACT else 0j
            for e, c in p.items():
                m = c if mode == EXACT else complex(c)
                for v, n in zip(ev, _unpack(e)):
                    if n:
                        m = m * v**n
                pv = pv + m
            if key is None:
                total = total + pv
                continue
            kind, phase = key
            if mode == EXACT:
                if phase.value(ev) != 0:
                    raise ModeError(f"{kind}({phase}) is transcendental at {event}; use approx mode")
                if kind == "cos":
                    total = total + pv
            else:
                lv = float(phase.value(ev))
                total = total + pv * (math.cos(lv) if kind == "cos" else math.sin(lv))
        return total

    # comparison ------------------------------------------------------------------
    def __eq__(self, other):
        if isinstance(other, (float, complex)):
            raise ModeError("exact/approximate equality test")
        try:
            o = SymScalar.coerce(other)
        except Exception:
            return NotImplemented
        return self._t == o._t

    def __ne__(self, other):
        r = self.__eq__(other)
        return r if r is NotImplemented else not r

    def __hash__(self):
        return hash(frozenset((k, frozenset(p.items())) for k, p in self._t.items()))

    def __bool__(self):
        return bool(self._t)

    # serialization -------------------------------------------------------------------
    def to_json(self) -> dict:
        poly = self._t.get(None, {})
        trig = []
        for key in sorted((k for k in self._t if k is not None), key=_key_order):
            kind, phase = key
            trig.append({
                "kind": kind,
                "phase": [format_rational(c, True) for c in phase.params],
                "poly": _poly_to_json(self._t[key]),
            })
        return {"poly_terms": _poly_to_json(poly), "trig_terms": trig}

    @classmethod
    def from_json(cls, data) -> "SymScalar":
        try:
            return cls._from_json(data)
        except (KeyError, TypeError, AttributeError) as exc:
            raise ValueError(f"malformed symbolic scalar: {exc!r}") from exc

    @classmethod
    def _from_json(cls, data) -> "SymScalar":
        if isinstance(data, (int, str)) and not isinstance(data, bool):
            return cls.const(_rat(data))
        if not isinstance(data, dict):
            raise ValueError(f"expected a symbolic scalar object, got {type(data).__name__}")
        unknown = set(data) - {"poly_terms", "trig_terms"}
        if unknown:
            raise ValueError(f"unknown keys {sorted(unknown)}")
        out = cls(_poly_from_json(data.get("poly_terms", [])))
        for item in data.get("trig_terms", []):
            phase = item["phase"]
            if len(phase) != 4:
                raise ValueError("phase needs four coefficients [omega, k1, k2, k3]")
            ph = LinPhase(*(_parse_rat(c) for c in phase))
            out = out + cls.trig(item["kind"], ph, cls(_poly_from_json(item.get("poly", []))))
        return out

    # display -----------------------------------------------------------------------
    def __str__(self):
        if not self._t:
            return "0"
        chunks = []
        for key in sorted(self._t, key=_key_order):
            body = _poly_str(self._t[key])
            if key is None:
                chunks.append(body)
            else:
                kind, phase = key
                atom = f"{kind}({phase})"
                if body == "1":
                    chunks.append(atom)
                elif body == "-1":
                    chunks.append("-" + atom)
                elif len(self._t[key]) == 1 and "+" not in body[1:] and " - " not in body:
                    chunks.append(f"{body}*{atom}")
                else:
                    chunks.append(f"({body})*{atom}")
        out = chunks[0]
        for c in chunks[1:]:
            out += " - " + c[1:] if c.startswith("-") else " + " + c
        return out

    def __repr__(self):
        return f"SymScalar({str(self)!r})"


def _key_order(key):
    if key is None:
        return (0, "", ())
    kind, phase = key
    return (1, kind, phase.params)


def _parse_rat(v):
    if isinstance(v, bool) or isinstance(v, float):
        raise ValueError(f"{v!r} is not an exact rational")
    return _rat(v)


def _poly_to_json(p: dict) -> list:
    return [
        {"exp": list(_unpack(e)), "re": format_rational(c.re, True), "im": format_rational(c.im, True)}
        for e, c in sorted(p.items(), reverse=True)
    ]


def _poly_from_json(items) -> dict:
    if not isinstance(items, list):
        raise ValueError("polynomial terms must be a list")
    out: dict = {}
    for item in items:
        c = Gaussian(_parse_rat(item.get("re", 0)), _parse_rat(item.get("im", 0)))
        _padd(out, {_pack(item["exp"]): c})
    return {None: out} if out else {}


def _mono_str(e: int) -> str:
    parts = []
    for var, n in zip(VARS, _unpack(e)):
        if n == 1:
            parts.append(var)
        elif n > 1:
            parts.append(f"{var}^{n}")
    return "*".join(parts)


def _poly_str(p: dict) -> str:
    out = []
    for e, c in sorted(p.items(), reverse=True):
        mono = _mono_str(e)
        coef = format_gaussian(c)
        neg = coef.startswith("-")
        mag = coef[1:] if neg else coef
        if mono:
            body = mono if mag == "1" else f"{mag}*{mono}"
        else:
            body = mag
        if not out:
            out.append(("-" if neg else "") + body)
        else:
            out.append(("- " if neg else "+ ") + body)
    return " ".join(out) if out else "0"


# convenience constructors ----------------------------------------------------------

def const(c) -> SymScalar:
    return SymScalar.const(c)


def var(name) -> SymScalar:
    return SymScalar.var(name)


t, x, y, z = (SymScalar.var(v) for v in VARS)
ZERO = SymScalar()
ONE = SymScalar.const(1)


def sym_add(a, b) -> SymScalar:
    return SymScalar.coerce(a) + b


def sym_mul(a, b) -> SymScalar:
    return SymScalar.coerce(a) * b


def sym_scale(c, a) -> SymScalar:
    return SymScalar.coerce(a) * Gaussian.coerce(c)


# calculus on scalars and vectors -------------------------------------------------

def partial(f, var) -> SymScalar:
    return SymScalar.coerce(f).partial(var)


def dt(f):
    """Time derivative of a scalar or componentwise of a sequence."""
    if isinstance(f, (list, tuple, np.ndarray)):
        return [dt(c) for c in f]
    return partial(f, "t")


def grad(f) -> list:
    return [partial(f, v) for v in ("x", "y", "z")]


def div(v) -> SymScalar:
    return partial(v[0], "x") + partial(v[1], "y") + partial(v[2], "z")


def curl(v) -> list:
    return [
        partial(v[2], "y") - partial(v[1], "z"),
        partial(v[0], "z") - partial(v[2], "x"),
        partial(v[1], "x") - partial(v[0], "y"),
    ]


def laplacian(f) -> SymScalar:
    return sum((partial(partial(f, v), v) for v in ("x", "y", "z")), ZERO)


def wave_op(f) -> SymScalar:
    """``d_t^2 f - (d_x^2 + d_y^2 + d_z^2) f``."""
    return partial(partial(f, "t"), "t") - laplacian(f)


def evaluate(f, event, mode: str = EXACT):
    return SymScalar.coerce(f).eval(event, mode)


# matrix-field divergence ---------------------------------------------------------

MINUS_DT = (-1, 1, 1, 1)
PLUS_DT = (1, 1, 1, 1)


def matrix_divergence(m, opvec=MINUS_DT) -> list:
    """Row ``i`` is ``sum_j s_j d_j(M_ij)`` for the operator column ``(s_0 d_t, d_x, d_y, d_z)``."""
    opvec = tuple(opvec)
    if opvec not in (MINUS_DT, PLUS_DT):
        raise ValueError("operator column must be (-d_t, grad) or (+d_t, grad)")
    m = np.asarray(m, dtype=object)
    out = []
    for i in range(4):
        acc = ZERO
        for j in range(4):
            d = partial(m[i, j], j)
            acc = acc + (d if opvec[j] == 1 else -d)
        out.append(acc)
    return out


def matrix_partial(m, var) -> np.ndarray:
    """Entrywise partial derivative of a symbolic matrix."""
    m = np.asarray(m, dtype=object)
    out = np.empty(m.shape, dtype=object)
    for idx, v in np.ndenumerate(m):
        out[idx] = partial(v, var)
    return out


def _cbar_nabla_entries():
    # [[0, grad^t], [grad, i x grad]] with x grad laid out like cross_matrix
    one, i_ = Gaussian(1), Gaussian(0, 1)
    ops = [[[] for _ in range(4)] for _ in range(4)]
    for k in (1, 2, 3):
        ops[0][k].append((one, k))
        ops[k][0].append((one, k))
    cross = [[None, (1, 3), (-1, 2)], [(-1, 3), None, (1, 1)], [(1, 2), (-1, 1), None]]
    for r in range(3):
        for c in range(3):
            if cross[r][c] is not None:
                s, v = cross[r][c]
                ops[r + 1][c + 1].append((i_ * s, v))
    return ops


CBAR_NABLA = _cbar_nabla_entries()


def apply_operator_matrix(ops, w) -> list:
    """Apply a 4x4 matrix of first-order operators ``[(coef, var), ...]`` to a 4-field."""
    out = []
    for row in ops:
        acc = ZERO
        for entry, comp in zip(row, w):
            for coef, v in entry:
                acc = acc + partial(comp, v) * coef
        out.append(acc)
    return out


def cbar_nabla(w) -> list:
    """The operator matrix ``[[0, grad^t], [grad, i x grad]]`` applied to ``w``."""
    return apply_operator_matrix(CBAR_NABLA, w)


def dt_plus_cbar_nabla(w, sign: int = 1) -> list:
    """``(d_t I + sign * cbar_nabla) w``."""
    cn = cbar_nabla(w)
    return [partial(a, "t") + (b if sign > 0 else -b) for a, b in zip(w, cn)]


# vectors / matrices of symbolic fields --------------------------------------------

def sym_vec(*components) -> list:
    return [SymScalar.coerce(c) for c in components]


def sym_matrix(rows) -> np.ndarray:
    m = np.empty((4, 4), dtype=object)
    for i in range(4):
        for j in range(4):
            m[i, j] = SymScalar.coerce(rows[i][j])
    return m


def vec_is_zero(v) -> bool:
    return all(SymScalar.coerce(c).is_zero() for c in v)


def vec_equal(a, b) -> bool:
    return len(a) == len(b) and all(SymScalar.coerce(p) == q for p, q in zip(a, b))


def vec_to_json(v) -> list:
    return [SymScalar.coerce(c).to_json() for c in v]


def vec_from_json(data, n: int) -> list:
    if not isinstance(data, list) or len(data) != n:
        raise ValueError(f"expected a list of {n} symbolic scalars")
    return [SymScalar.from_json(c) for c in data]


@dataclass(frozen=True)
class FourPotential:
    """Scalar potential ``phi`` and vector potential ``A``."""

    phi: SymScalar
    A: tuple

    def __post_init__(self):
        object.__setattr__(self, "phi", SymScalar.coerce(self.phi))
        if len(self.A) != 3:
            raise ValueError("vector potential needs three components")
        object.__setattr__(self, "A", tuple(SymScalar.coerce(c) for c in self.A))

    def to_json(self) -> dict:
        return {"phi": self.phi.to_json(), "A": vec_to_json(self.A)}

    @classmethod
    def from_json(cls, data) -> "FourPotential":
        if not isinstance(data, dict) or "phi" not in data or "A" not in data:
            raise ValueError("a four-potential needs 'phi' and 'A'")
        return cls(SymScalar.from_json(data["phi"]), tuple(vec_from_json(data["A"], 3)))


@dataclass(frozen=True)
class SymEMField:
    """Symbolic electric and magnetic fields with real coefficients."""

    E: tuple
    B: tuple

    def __post_init__(self):
        for name in ("E", "B"):
            v = getattr(self, name)
            if len(v) != 3:
                raise ValueError(f"{name} needs three components")
            v = tuple(SymScalar.coerce(c) for c in v)
            if not all(c.is_real() for c in v):
                raise ValueError(f"{name} must have real coefficients")
            object.__setattr__(self, name, v)

    def to_json(self) -> dict:
        return {"E": vec_to_json(self.E), "B": vec_to_json(self.B)}

    @classmethod
    def from_json(cls, data) -> "SymEMField":
        if not isinstance(data, dict) or "E" not in data or "B" not in data:
            raise ValueError("a field needs 'E' and 'B'")
        return cls(tuple(vec_from_json(data["E"], 3)), tuple(vec_from_json(data["B"], 3)))
