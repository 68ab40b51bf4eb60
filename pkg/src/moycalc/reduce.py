"""
Simplification of Koszul factorizations.

The workhorse is variable exclusion: a row whose b-entry (or, after the
translation trick, whose a-entry) is monic in a variable v absent from
the potential can be deleted, passing to the quotient by that entry.
Linear entries (power 1) are eliminated by outright substitution, so no
rule lingers in the base; higher powers become quotient-ring rules.

auto_reduce drives exclusions to a fixpoint.  A greedy choice can dead-end
(excluding the wrong generator first may block the remaining rows), so the
driver backtracks depth-first over candidates in (row, variable, side)
order and keeps the first branch that reaches zero rows everywhere;
failing that, it returns the greedy fixpoint.  The result is deterministic.
"""

from fractions import Fraction

from .poly import Poly, var_degree, var_key
from .quotient import QuotientRing, TriangularityViolation
from .mf import KoszulMF, KoszulRow, MFSum, ZeroScalar


class VariableInPotential(ValueError):
    pass


class NotMonicInVariable(ValueError):
    pass


class ResidualVariable(ValueError):
    pass


class ReductionTrace:
    """Ordered record of reduction steps, replayable with replay()."""

    def __init__(self, steps=None):
        self.steps = list(steps or ())

    def record(self, kind, **info):
        self.steps.append((kind, info))

    def __len__(self):
        return len(self.steps)

    def summary(self):
        return [self._describe(kind, info) for kind, info in self.steps]

    @staticmethod
    def _describe(kind, info):
        if kind == "exclude":
            return "exclude %s%d (row %d, %s-side, power %d)" % (
                info["var"][0], info["var"][1], info["row"], info["side"],
                info["power"])
        if kind == "split":
            return "split off %d copies along %s%d" % (
                info["power"], info["var"][0], info["var"][1])
        if kind == "drop":
            return "drop contractible rows %s" % (list(info["rows"]),)
        return kind


def scale_row(mf, i, c):
    """Lemma-equiv rescaling: row i becomes (c*a; b/c)."""
    c = Fraction(c)
    if not c:
        raise ZeroScalar("scale factor must be nonzero")
    rows = list(mf.rows)
    rows[i] = rows[i].scaled(c)
    return mf.replace(rows=rows)


def _monic_data(p, v):
    """(power d, constant lead coeff c) if p = c*v^d + lower-in-v, else None."""
    d = p.degree_in(v)
    if d == 0:
        return None
    lead = p.coefficient_in(v, d)
    if not lead.is_constant():
        return None
    return d, lead.constant_value()


def exclude_variable(mf, i, v, side=None):
    """Remove row i, quotienting the base by its (monic in v) b-entry.

    side "a" first rewrites the row by the translation functor so the
    a-entry becomes the usable b-entry; side None tries b then a.
    """
    if side is None:
        if _monic_data(mf.rows[i].b, v):
            side = "b"
        elif _monic_data(mf.rows[i].a, v):
            side = "a"
        else:
            raise NotMonicInVariable("row %d is not monic in %s%d" % (i, *v))
    if side == "a":
        mf = mf.flip_row(i)

    row = mf.rows[i]
    data = _monic_data(row.b, v)
    if data is None:
        raise NotMonicInVariable("entry %s is not monic in %s%d" % (row.b, *v))
    d, c = data
    if mf.potential().degree_in(v):
        raise VariableInPotential("potential contains %s%d" % v)

    mf = scale_row(mf, i, c)  # makes b monic: b = v^d + p
    row = mf.rows[i]
    repl = -(row.b - Poly.var(v, d))
    rows = [r for j, r in enumerate(mf.rows) if j != i]

    if d == 1:
        base = mf.base.substitute(v, repl)
        rows = [r.mapped(lambda p: base.normal_form(p.substitute({v: repl})))
                for r in rows]
    else:
        base = mf.base.with_rule(v, d, repl)
        rows = [r.mapped(base.normal_form) for r in rows]
    return KoszulMF(rows, base, mf.shift, mf.parity)


def eliminate_contractible(mf):
    """Drop every row with a nonzero rational-constant entry."""
    nf = mf.base.normal_form
    rows = []
    dropped = []
    for i, row in enumerate(mf.rows):
        a, b = nf(row.a), nf(row.b)
        if (a.is_constant() and not a.is_zero()) or \
           (b.is_constant() and not b.is_zero()):
            dropped.append(i)
        else:
            rows.append(row)
    return mf.replace(rows=rows), dropped


def split_free_module(mf, v):
    """Split along the rule basis 1, v, ..., v^{d-1} of the base module."""
    rule = mf.base.rule_for(v)
    if rule is None:
        raise ValueError("no rule with leader %s%d" % v)
    d, _ = rule
    nf = mf.base.normal_form
    for i, row in enumerate(mf.rows):
        if nf(row.a).degree_in(v) or nf(row.b).degree_in(v):
            raise ResidualVariable("row %d still contains %s%d" % (i, *v))
    for w, dw, p in mf.base.rules:
        if w != v and p.degree_in(v):
            raise ResidualVariable("rule on %s%d still contains %s%d"
                                   % (w[0], w[1], *v))
    base = QuotientRing([r for r in mf.base.rules if r[0] != v])
    copies = [KoszulMF([r.mapped(nf) for r in mf.rows], base,
                       mf.shift + k * var_degree(v), mf.parity)
              for k in range(d)]
    return MFSum(copies)


def _exclusion_candidates(mf, order=None):
    """Feasible (row, var, side) triples in deterministic preference order."""
    potential = mf.potential()
    out = []
    for i, row in enumerate(mf.rows):
        variables = sorted(row.a.variables() | row.b.variables(), key=var_key)
        for v in variables:
            if potential.degree_in(v):
                continue
            for side, entry in (("b", row.b), ("a", row.a)):
                data = _monic_data(entry, v)
                if data is None:
                    continue
                out.append((i, v, side))
    if order is not None:
        order.shuffle(out)
    return out


def _splittable_variables(mf):
    if not mf.rows:
        return []
    nf = mf.base.normal_form
    out = []
    for v, d, _ in mf.base.rules:
        if any(nf(r.a).degree_in(v) or nf(r.b).degree_in(v) for r in mf.rows):
            continue
        if any(w != v and p.degree_in(v) for w, _, p in mf.base.rules):
            continue
        out.append(v)
    return sorted(out, key=var_key)


def auto_reduce(mf, order=None):
    """Reduce to a fixpoint; returns (MFSum, ReductionTrace).

    order, if given, is a random.Random used to shuffle candidate order
    (for order-independence testing); default order is deterministic.
    """
    trace = ReductionTrace()
    budget = {"branches": 16}
    summands = _reduce(mf.normalized_rows(), trace, order, budget)
    return MFSum(summands), trace


def _reduce(mf, trace, order, budget):
    mf, dropped = eliminate_contractible(mf)
    if dropped:
        trace.record("drop", rows=tuple(dropped))

    best = None
    for (i, v, side) in _exclusion_candidates(mf, order):
        if budget["branches"] <= 0 and best is not None:
            break
        sub_trace = ReductionTrace()
        try:
            nxt = exclude_variable(mf, i, v, side)
        except (TriangularityViolation, VariableInPotential,
                NotMonicInVariable):
            continue
        budget["branches"] -= 1
        d = mf.rows[i].b.degree_in(v) if side == "b" \
            else mf.rows[i].a.degree_in(v)
        sub_trace.record("exclude", row=i, var=v, side=side, power=d)
        summands = _reduce(nxt, sub_trace, order, budget)
        if all(not s.rows for s in summands):
            trace.steps.extend(sub_trace.steps)
            return summands
        if best is None:
            best = (sub_trace, summands)
    if best is not None:
        trace.steps.extend(best[0].steps)
        return best[1]

    for v in _splittable_variables(mf):
        d, _ = mf.base.rule_for(v)
        trace.record("split", var=v, power=d)
        out = []
        for copy in split_free_module(mf, v):
            out.extend(_reduce(copy, trace, order, budget))
            trace.record("pop")
        return out

    return [mf]


def replay(mf, trace):
    """Re-apply a recorded trace to the input factorization."""
    stack = [mf.normalized_rows()]
    done = []
    for kind, info in trace.steps:
        cur = stack.pop()
        if kind == "drop":
            rows = [r for j, r in enumerate(cur.rows)
                    if j not in info["rows"]]
            stack.append(cur.replace(rows=rows))
        elif kind == "exclude":
            stack.append(exclude_variable(cur, info["row"], info["var"],
                                          info["side"]))
        elif kind == "split":
            parts = list(split_free_module(cur, info["var"]))
            stack.extend(reversed(parts))
        elif kind == "pop":
            done.append(cur)
        else:
            raise ValueError("unknown step %r" % kind)
    done.extend(reversed(stack))
    return MFSum(done)


def canonical_form(mf):
    """Monic-b rows (monic-a when b = 0), sorted, with variables relabeled
    by order of appearance; equality of canonical forms is decidable and
    insensitive to the arbitrary names reduction happens to leave behind."""
    cur = _normalize_rows(mf)
    for _ in range(10):
        nxt = _normalize_rows(_relabel(cur))
        if nxt == cur:
            break
        cur = nxt
    return cur


def _normalize_rows(mf):
    nf = mf.base.normal_form
    rows = []
    for row in mf.rows:
        row = row.mapped(nf)
        if not row.b.is_zero():
            _, lc = row.b.leading()
            row = row.scaled(lc)
        elif not row.a.is_zero():
            _, lc = row.a.leading()
            row = row.scaled(1 / lc)
        rows.append(row)
    rows.sort(key=lambda r: (r.b.sort_key(), r.a.sort_key(),
                             r.deg_a, r.deg_b))
    return mf.replace(rows=rows)


def _relabel(mf):
    """Rename variables of each kind by first appearance in the sorted
    rows (b before a, monomials in decreasing order), then in the rules."""
    from .poly import mono_sort_key

    order = []
    seen = set()

    def visit(p):
        for mono in sorted(p.terms, key=mono_sort_key, reverse=True):
            for v, _ in mono:
                if v not in seen:
                    seen.add(v)
                    order.append(v)

    for row in mf.rows:
        visit(row.b)
        visit(row.a)
    for v, _, p in sorted(mf.base.rules, key=lambda r: var_key(r[0])):
        if v not in seen:
            seen.add(v)
            order.append(v)
        visit(p)

    counters = {"x": 0, "y": 0, "z": 0}
    var_map = {}
    for v in order:
        counters[v[0]] += 1
        var_map[v] = (v[0], counters[v[0]])
    poly_map = {old: Poly.var(new) for old, new in var_map.items()}

    def sub(p):
        return p.substitute(poly_map)

    rows = [r.mapped(sub) for r in mf.rows]
    rules = tuple(sorted(((var_map[v], d, sub(p))
                          for v, d, p in mf.base.rules),
                         key=lambda r: var_key(r[0])))
    if rows == list(mf.rows) and rules == mf.base.rules:
        return mf
    return KoszulMF(rows, QuotientRing(rules), mf.shift, mf.parity)
