"""Truncated multivariate power series over exact Gaussian rationals.

A series carries an ordered variable tuple, a truncation order, a sparse
coefficient map keyed by exponent tuples (multidegrees), and an ``exact``
flag.  The two regimes:

* ``exact=False`` (a *jet*): coefficients of total degree <= ``order`` are
  the true Taylor coefficients of the represented germ; higher degrees are
  unknown and never stored.
* ``exact=True`` (a *polynomial*): the stored terms are the whole function.
  The order is canonicalized to the polynomial's total degree, and ring
  operations between exact operands never truncate.

Order bookkeeping under mixed operands treats an exact operand as having
infinite certified order, so e.g. a jet of order N times a polynomial is a
jet of order N.  Every operation is pure: series are never mutated after
construction, so values are safe to share and reuse freely.
"""

from __future__ import annotations

from typing import Mapping, Sequence

from .rational import GaussianRational, ZERO, ONE

Multidegree = tuple  # exponent tuple, one nonnegative entry per variable


class SeriesError(ValueError):
    """Base class for series arithmetic contract violations."""


class VariableMismatchError(SeriesError):
    pass


class NotInvertibleError(SeriesError):
    """Zero constant term: division would require evaluating at a pole
    (downstream this signals a Levi-degenerate base point)."""


class CompositionError(SeriesError):
    pass


class SingularJacobianError(SeriesError):
    """The linearized implicit system is singular at the base point."""


def total_degree(mdeg: Multidegree) -> int:
    return sum(mdeg)


def grlex_key(mdeg: Multidegree):
    """Graded-lexicographic sort key: grade first, then lex on exponents."""
    return (sum(mdeg), mdeg)


class TruncatedSeries:
    """Sparse truncated power series; see module docstring for semantics."""

    __slots__ = ("vars", "order", "coeffs", "exact", "_deg_cache")

    def __init__(self, vars: Sequence[str], order: int,
                 coeffs: Mapping[Multidegree, GaussianRational] | None = None,
                 exact: bool = False):
        vars = tuple(vars)
        if len(set(vars)) != len(vars):
            raise SeriesError(f"duplicate variable names in {vars}")
        if order < 0:
            raise SeriesError("truncation order must be >= 0")
        nv = len(vars)
        clean = {}
        if coeffs:
            for key, c in coeffs.items():
                key = tuple(key)
                if len(key) != nv or any(e < 0 for e in key):
                    raise SeriesError(f"bad multidegree {key} for vars {vars}")
                if not isinstance(c, GaussianRational):
                    c = GaussianRational(c)
                if c.is_zero():
                    continue
                if not exact and sum(key) > order:
                    continue
                clean[key] = c
        if exact:
            order = max((sum(k) for k in clean), default=0)
        self.vars = vars
        self.order = order
        self.coeffs = clean
        self.exact = exact
        self._deg_cache = None

    # -- constructors ----------------------------------------------------

    @classmethod
    def zero(cls, vars, order=0, exact=False):
        return cls(vars, order, {}, exact)

    @classmethod
    def const(cls, vars, value, order=0, exact=False):
        value = value if isinstance(value, GaussianRational) else GaussianRational(value)
        return cls(vars, order, {(0,) * len(vars): value}, exact)

    @classmethod
    def variable(cls, vars, name, order=1, exact=False):
        vars = tuple(vars)
        key = [0] * len(vars)
        key[vars.index(name)] = 1
        return cls(vars, order, {tuple(key): ONE}, exact)

    # -- inspection -------------------------------------------------------

    @property
    def constant_term(self) -> GaussianRational:
        return self.coeffs.get((0,) * len(self.vars), ZERO)

    def coefficient(self, mdeg: Multidegree) -> GaussianRational:
        return self.coeffs.get(tuple(mdeg), ZERO)

    def is_zero(self) -> bool:
        return not self.coeffs

    def degree(self) -> int:
        """Total degree of the stored terms (0 for the zero series)."""
        return max((sum(k) for k in self.coeffs), default=0)

    def min_nonzero(self):
        """(multidegree, coefficient) of the grlex-minimal nonzero term,
        or None for the zero series."""
        if not self.coeffs:
            return None
        key = min(self.coeffs, key=grlex_key)
        return key, self.coeffs[key]

    def _eff_order(self):
        return float("inf") if self.exact else self.order

    def _by_degree(self):
        cache = self._deg_cache
        if cache is None:
            cache = {}
            for key, c in self.coeffs.items():
                cache.setdefault(sum(key), []).append((key, c))
            self._deg_cache = cache
        return cache

    # -- equality (vars, order, coefficient map) --------------------------

    def __eq__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return (self.vars == other.vars and self.order == other.order
                and self.coeffs == other.coeffs)

    def __hash__(self):
        return hash((self.vars, self.order, frozenset(self.coeffs.items())))

    # -- ring operations ---------------------------------------------------

    def _check_same_vars(self, other):
        if self.vars != other.vars:
            raise VariableMismatchError(
                f"variable sets differ: {self.vars} vs {other.vars}")

    def __add__(self, other):
        if isinstance(other, (int, GaussianRational)):
            other = TruncatedSeries.const(self.vars, other, self.order, self.exact)
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        self._check_same_vars(other)
        exact = self.exact and other.exact
        if exact:
            limit = None
            order = 0  # canonicalized by the constructor
        else:
            limit = order = int(min(self._eff_order(), other._eff_order()))
        out = dict(self.coeffs) if limit is None else {
            k: c for k, c in self.coeffs.items() if sum(k) <= limit}
        for k, c in other.coeffs.items():
            if limit is not None and sum(k) > limit:
                continue
            acc = out.get(k)
            s = c if acc is None else acc + c
            if s.is_zero():
                out.pop(k, None)
            else:
                out[k] = s
        return TruncatedSeries(self.vars, order, out, exact)

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self):
        out = {k: -c for k, c in self.coeffs.items()}
        return TruncatedSeries(self.vars, self.order, out, self.exact)

    def __mul__(self, other):
        if isinstance(other, (int, GaussianRational)):
            return self.scaled(other)
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        self._check_same_vars(other)
        exact = self.exact and other.exact
        limit = None if exact else int(min(self._eff_order(), other._eff_order()))
        out = {}
        a_by = self._by_degree()
        b_by = other._by_degree()
        for da, terms_a in a_by.items():
            for db, terms_b in b_by.items():
                if limit is not None and da + db > limit:
                    continue
                for ka, ca in terms_a:
                    for kb, cb in terms_b:
                        k = tuple(x + y for x, y in zip(ka, kb))
                        v = ca * cb
                        acc = out.get(k)
                        out[k] = v if acc is None else acc + v
        order = 0 if exact else limit
        return TruncatedSeries(self.vars, order, out, exact)

    __rmul__ = __mul__

    def scaled(self, c) -> "TruncatedSeries":
        if not isinstance(c, GaussianRational):
            c = GaussianRational(c)
        if c.is_zero():
            return TruncatedSeries(self.vars, self.order, {}, self.exact)
        out = {k: v * c for k, v in self.coeffs.items()}
        return TruncatedSeries(self.vars, self.order, out, self.exact)

    def __pow__(self, k):
        if not isinstance(k, int) or k < 0:
            raise SeriesError("series exponent must be a nonnegative integer")
        result = TruncatedSeries.const(self.vars, ONE, self.order, self.exact)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    # -- truncation --------------------------------------------------------

    def jet(self, n: int) -> "TruncatedSeries":
        """The order-n jet (always a non-exact truncation).

        For a jet input, n must not exceed the certified order.
        """
        if not self.exact and n > self.order:
            raise SeriesError(
                f"cannot promote a jet of order {self.order} to order {n}")
        out = {k: c for k, c in self.coeffs.items() if sum(k) <= n}
        return TruncatedSeries(self.vars, n, out, False)

    def truncated(self, n: int) -> "TruncatedSeries":
        """Like jet(), but an exact polynomial of degree <= n stays exact."""
        if self.exact and self.order <= n:
            return self
        return self.jet(min(n, self.order) if not self.exact else n)

    # -- calculus ------------------------------------------------------------

    def diff(self, var: str) -> "TruncatedSeries":
        try:
            idx = self.vars.index(var)
        except ValueError:
            raise VariableMismatchError(
                f"unknown variable {var!r}; have {self.vars}") from None
        if not self.exact and self.order == 0:
            raise SeriesError("cannot differentiate an order-0 jet")
        out = {}
        for key, c in self.coeffs.items():
            e = key[idx]
            if e == 0:
                continue
            nk = key[:idx] + (e - 1,) + key[idx + 1:]
            out[nk] = c * e
        order = self.order if self.exact else self.order - 1
        return TruncatedSeries(self.vars, order, out, self.exact)

    def invert(self, order: int | None = None) -> "TruncatedSeries":
        """Multiplicative inverse up to truncation order (Newton iteration).

        Requires a nonzero constant term.  An exact nonconstant polynomial
        has a non-polynomial inverse, so a target order must be supplied
        for it; exact constants invert exactly.
        """
        c0 = self.constant_term
        if c0.is_zero():
            raise NotInvertibleError(
                "series has zero constant term (degenerate evaluation point)")
        if self.exact and not any(sum(k) for k in self.coeffs):
            return TruncatedSeries.const(self.vars, c0.inverse(), 0, True)
        if order is None:
            if self.exact:
                raise SeriesError(
                    "inverting a nonconstant exact polynomial requires an "
                    "explicit truncation order")
            order = self.order
        x = TruncatedSeries.const(self.vars, c0.inverse(), 0)
        k = 0
        two = TruncatedSeries.const(self.vars, GaussianRational(2), order)
        while k < order:
            k = min(2 * k + 1, order)
            # lift the iterate to its polynomial representative so the
            # order-capping does not shadow the precision doubling
            xp = TruncatedSeries(self.vars, 0, x.coeffs, exact=True)
            a_k = self.truncated(k)
            x = (xp * (two.jet(k) - (a_k * xp).jet(k))).jet(k)
        return x

    # -- substitution ----------------------------------------------------------

    def compose(self, subs: Mapping[str, "TruncatedSeries"],
                order: int | None = None) -> "TruncatedSeries":
        """Substitute a series for every variable.

        All substituted series must live over one common target variable
        tuple.  A substitution with nonzero constant term is only allowed
        when this series is exact (a polynomial), since constant shifts of
        a jet would silently invalidate its truncation certificate.
        """
        missing = [v for v in self.vars if v not in subs]
        if missing:
            raise CompositionError(f"no substitution given for {missing}")
        series_list = [subs[v] for v in self.vars]
        target_vars = series_list[0].vars
        for s in series_list:
            if s.vars != target_vars:
                raise VariableMismatchError(
                    "substitutions must share one variable tuple")
        exact = self.exact and all(s.exact for s in series_list)
        if not self.exact:
            for v in self.vars:
                if not subs[v].constant_term.is_zero():
                    raise CompositionError(
                        f"substituting a nonzero constant term into {v!r} of a "
                        "jet-only series would lose truncation soundness")
        if exact:
            limit = None
        else:
            caps = [self._eff_order()] + [s._eff_order() for s in series_list]
            if order is not None:
                caps.append(order)
            limit = int(min(caps))
        one = TruncatedSeries.const(target_vars, ONE, limit if limit is not None else 0,
                                    exact if limit is None else False)
        pow_cache = [[one] for _ in series_list]
        if limit is not None:
            series_list = [s.truncated(limit) for s in series_list]

        def power(i, e):
            cache = pow_cache[i]
            while len(cache) <= e:
                nxt = cache[-1] * series_list[i]
                if limit is not None:
                    nxt = nxt.truncated(limit)
                cache.append(nxt)
            return cache[e]

        acc = TruncatedSeries.zero(target_vars,
                                   0 if limit is None else limit, exact)
        for key, c in self.coeffs.items():
            term = None
            for i, e in enumerate(key):
                if e == 0:
                    continue
                p = power(i, e)
                term = p if term is None else term * p
            if term is None:
                term = one
            acc = acc + term.scaled(c)
        if limit is not None:
            acc = acc.jet(limit)
        return acc

    def renamed(self, mapping: Mapping[str, str]) -> "TruncatedSeries":
        new_vars = tuple(mapping.get(v, v) for v in self.vars)
        return TruncatedSeries(new_vars, self.order, self.coeffs, self.exact)

    def extended(self, new_vars: Sequence[str]) -> "TruncatedSeries":
        """Reinterpret over a larger variable tuple (a ring embedding)."""
        new_vars = tuple(new_vars)
        try:
            pos = [new_vars.index(v) for v in self.vars]
        except ValueError as e:
            raise VariableMismatchError(str(e)) from None
        nv = len(new_vars)
        out = {}
        for key, c in self.coeffs.items():
            nk = [0] * nv
            for p, e in zip(pos, key):
                nk[p] = e
            out[tuple(nk)] = c
        return TruncatedSeries(new_vars, self.order, out, self.exact)

    def shifted(self, offsets: Mapping[str, GaussianRational]) -> "TruncatedSeries":
        """Re-expand an exact polynomial around a translated base point."""
        if not self.exact:
            raise CompositionError("only exact polynomials can be recentered "
                                   "away from the origin")
        subs = {}
        for v in self.vars:
            s = TruncatedSeries.variable(self.vars, v, exact=True)
            off = offsets.get(v)
            if off is not None and not off.is_zero():
                s = s + TruncatedSeries.const(self.vars, off, exact=True)
            subs[v] = s
        return self.compose(subs)

    # -- evaluation ---------------------------------------------------------

    def evaluate(self, values: Mapping[str, GaussianRational]) -> GaussianRational:
        """Exact evaluation of the stored terms at a point."""
        missing = [v for v in self.vars if v not in values]
        if missing:
            raise SeriesError(f"no value for {missing}")
        point = [values[v] if isinstance(values[v], GaussianRational)
                 else GaussianRational(values[v]) for v in self.vars]
        total = ZERO
        pow_cache = [{0: ONE} for _ in point]

        def power(i, e):
            cache = pow_cache[i]
            if e not in cache:
                cache[e] = point[i] ** e
            return cache[e]

        for key, c in self.coeffs.items():
            term = c
            for i, e in enumerate(key):
                if e:
                    term = term * power(i, e)
            total = total + term
        return total

    def evaluate_complex(self, values: Mapping[str, complex]) -> complex:
        """Floating-point evaluation (quarantined: advisory use only)."""
        total = 0j
        for key, c in self.coeffs.items():
            term = complex(c)
            for v, e in zip(self.vars, key):
                if e:
                    term *= values[v] ** e
            total += term
        return total

    # -- display ---------------------------------------------------------------

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for key in sorted(self.coeffs, key=grlex_key):
            c = self.coeffs[key]
            monos = []
            for v, e in zip(self.vars, key):
                if e == 1:
                    monos.append(v)
                elif e > 1:
                    monos.append(f"{v}^{e}")
            cs = str(c)
            needs_paren = ("+" in cs[1:]) or ("-" in cs[1:]) or cs.startswith("-") or "i" in cs
            if not monos:
                parts.append(f"({cs})" if needs_paren and parts else cs)
            elif cs == "1":
                parts.append("*".join(monos))
            else:
                if needs_paren:
                    cs = f"({cs})"
                parts.append(f"{cs}*" + "*".join(monos))
        return " + ".join(parts)

    def __repr__(self):
        tag = "exact" if self.exact else f"O({self.order + 1})"
        return f"<series in {','.join(self.vars)} [{tag}]: {self}>"


def solve_implicit(equations: Sequence[TruncatedSeries],
                   unknowns: Sequence[str],
                   order: int | None = None) -> list[TruncatedSeries]:
    """Solve F(x, y) = 0 for y(x) with y(0) = 0.

    ``equations`` is a square system F_1 .. F_m over variables that include
    the m ``unknowns``; the remaining variables are parameters.  Requires
    F(0) = 0 and an invertible constant Jacobian dF/dy(0).  Uses Newton
    iteration with quadratic precision doubling; the linear step is solved
    by Cramer's rule over the series ring (the system sizes here are tiny).

    Returns the unknowns as series in the parameter variables, each with
    zero constant term, satisfying F(x, y(x)) = 0 up to the target order.
    """
    from . import linalg

    m = len(equations)
    if m == 0 or len(unknowns) != m:
        raise SeriesError("need as many equations as unknowns")
    all_vars = equations[0].vars
    for f in equations:
        if f.vars != all_vars:
            raise VariableMismatchError("equations must share one variable tuple")
    unknowns = tuple(unknowns)
    for y in unknowns:
        if y not in all_vars:
            raise VariableMismatchError(f"unknown {y!r} not among {all_vars}")
    params = tuple(v for v in all_vars if v not in unknowns)

    if order is None:
        finite = [f.order for f in equations if not f.exact]
        if not finite:
            raise SeriesError("solving an all-exact system requires an explicit order")
        order = min(finite)

    for f in equations:
        if not f.constant_term.is_zero():
            raise SeriesError("implicit system does not vanish at the origin")

    jac_rows = [[f.diff(y) for y in unknowns] for f in equations]
    j0 = [[row[j].constant_term for j in range(m)] for row in jac_rows]
    if linalg.det_scalar(j0).is_zero():
        raise SingularJacobianError(
            "Jacobian with respect to the unknowns is singular at the origin")

    param_series = {v: TruncatedSeries.variable(params, v, order) for v in params}
    y_cur = [TruncatedSeries.zero(params, 0) for _ in unknowns]
    k = 0
    while k < order:
        k = min(2 * k + 1, order)
        # The iterate is only *correct* to the previous precision, but Newton
        # must evaluate F on its full polynomial representative; lifting to an
        # exact polynomial stops the compose order-capping from shadowing the
        # doubling step.
        subs = {v: param_series[v].jet(k) for v in params}
        for name, ys in zip(unknowns, y_cur):
            subs[name] = TruncatedSeries(params, 0, ys.coeffs, exact=True)
        fy = [f.compose(subs, order=k) for f in equations]
        jy = [[entry.compose(subs, order=k) for entry in row] for row in jac_rows]
        delta = linalg.solve_series(jy, [-f for f in fy], k)
        y_cur = [(subs[name] + d).jet(k)
                 for name, d in zip(unknowns, delta)]

    # functional-equation check: the solution must actually solve the system
    subs = {v: param_series[v] for v in params}
    subs.update(dict(zip(unknowns, y_cur)))
    for f in equations:
        residual = f.compose(subs, order=order)
        if not residual.is_zero():
            raise ArithmeticError("Newton iteration failed to converge "
                                  f"(residual {residual})")
    return y_cur
