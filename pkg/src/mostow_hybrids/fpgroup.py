"""Finitely presented groups and Todd-Coxeter coset enumeration.

Words are tuples of nonzero ints: k stands for generator k-1 and -k for its
inverse. Enumeration is HLT (relators scanned from every coset in
order, defining cosets as needed) with a lookahead pass when the table
reaches its size limit; the strategy is fixed so runs are reproducible.

The module also checks the word identities behind the normal subgroup K
generated by the reflections J R_i R_(i-1), as exact matrix identities in
the Mostow groups.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .isometry import proj_equal
from .report import Check


# -- words and presentations -----------------------------------------------


def free_reduce(word):
    out = []
    for x in word:
        if out and out[-1] == -x:
            out.pop()
        else:
            out.append(x)
    return tuple(out)


def cyclic_reduce(word):
    w = list(free_reduce(word))
    while len(w) > 1 and w[0] == -w[-1]:
        w = w[1:-1]
    return tuple(w)


def invert(word):
    return tuple(-x for x in reversed(word))


_WTOKEN = re.compile(r"\s*([A-Za-z][A-Za-z0-9_]*|\(|\)|\^\s*-?\d+)")


def parse_words(text, gens):
    """Parse a word over the named generators, e.g. "(J^-1 R1)^2"."""
    index = {g: k + 1 for k, g in enumerate(gens)}
    tokens, pos = [], 0
    text = text.strip()
    while pos < len(text):
        m = _WTOKEN.match(text, pos)
        if not m:
            raise ValueError(f"cannot parse word at {text[pos:]!r}")
        tokens.append(m.group(1).replace(" ", ""))
        pos = m.end()

    def seq(k, depth):
        out = []
        while k < len(tokens):
            tok = tokens[k]
            if tok == ")":
                if not depth:
                    raise ValueError("unbalanced ')'")
                return out, k + 1
            if tok == "(":
                part, k = seq(k + 1, depth + 1)
            elif tok in index:
                part, k = [index[tok]], k + 1
            else:
                raise ValueError(f"unknown generator {tok!r}")
            exp = 1
            if k < len(tokens) and tokens[k].startswith("^"):
                exp = int(tokens[k][1:])
                k += 1
            part = part if exp >= 0 else list(invert(part))
            out.extend(part * abs(exp))
        if depth:
            raise ValueError("unbalanced '('")
        return out, k

    word, _ = seq(0, 0)
    return free_reduce(word)


@dataclass(frozen=True)
class Presentation:
    gens: tuple
    relators: tuple
    note: str = ""

    def __post_init__(self):
        gens = tuple(self.gens)
        if len(set(gens)) != len(gens):
            raise ValueError("generator names must be unique")
        rels = []
        for r in self.relators:
            w = parse_words(r, gens) if isinstance(r, str) else cyclic_reduce(r)
            w = cyclic_reduce(w)
            if w and w not in rels:
                rels.append(w)
        object.__setattr__(self, "gens", gens)
        object.__setattr__(self, "relators", tuple(rels))

    def word(self, text):
        return parse_words(text, self.gens)

    def format_word(self, w):
        parts = []
        for x in w:
            g = self.gens[abs(x) - 1]
            if parts and parts[-1][0] == g and (parts[-1][1] > 0) == (x > 0):
                parts[-1][1] += 1 if x > 0 else -1
            else:
                parts.append([g, 1 if x > 0 else -1])
        return " ".join(g if e == 1 else f"{g}^{e}" for g, e in parts) or "1"

    def __str__(self):
        rels = ", ".join(self.format_word(r) for r in self.relators)
        return f"< {', '.join(self.gens)} | {rels} >"


# -- coset enumeration -----------------------------------------------------


@dataclass(frozen=True)
class Index:
    n: int
    table: "CosetTable"

    def __int__(self):
        return self.n


@dataclass(frozen=True)
class Overflow:
    max_cosets: int
    defined: int


@dataclass(frozen=True)
class CosetTable:
    """Standardized complete table: rows[c][col], cols g0, g0^-1, g1, ..."""

    rows: tuple
    ngens: int

    def action(self, k, inverse=False):
        col = 2 * k + (1 if inverse else 0)
        return tuple(r[col] for r in self.rows)

    def permutations(self):
        return [self.action(k) for k in range(self.ngens)]


class _Enumerator:
    def __init__(self, pres, max_cosets):
        self.n = len(pres.gens)
        self.rels = pres.relators
        self.max = max_cosets
        self.table = [[None] * (2 * self.n)]
        self.parent = [0]
        self.live = 1
        self.defined = 1

    @staticmethod
    def col(x):
        return 2 * (x - 1) if x > 0 else 2 * (-x - 1) + 1

    @staticmethod
    def inv_col(c):
        return c ^ 1

    def rep(self, k):
        p = self.parent
        r = k
        while p[r] != r:
            r = p[r]
        while p[k] != r:
            p[k], k = r, p[k]
        return r

    def alive(self, c):
        return self.parent[c] == c

    def define(self, c, x):
        if self.live >= self.max:
            self.lookahead()
            if self.live >= self.max:
                raise _Full()
            c = self.rep(c)
            if self.table[c][x] is not None:
                return
        d = len(self.table)
        self.table.append([None] * (2 * self.n))
        self.parent.append(d)
        self.live += 1
        self.defined += 1
        self.table[c][x] = d
        self.table[d][self.inv_col(x)] = c

    def lookahead(self):
        for c in range(len(self.table)):
            for r in self.rels:
                if not self.alive(c):
                    break
                self.scan(c, r, fill=False)

    def scan(self, c, word, fill=True):
        t = self.table
        cols = [self.col(x) for x in word]
        f, i = c, 0
        b, j = c, len(cols) - 1
        while True:
            while i <= j and t[f][cols[i]] is not None:
                f = t[f][cols[i]]
                i += 1
            if i > j:
                if f != b:
                    self.coincidence(f, b)
                return
            while j >= i and t[b][self.inv_col(cols[j])] is not None:
                b = t[b][self.inv_col(cols[j])]
                j -= 1
            if j < i:
                self.coincidence(f, b)
                return
            if i == j:
                t[f][cols[i]] = b
                t[b][self.inv_col(cols[i])] = f
                return
            if not fill:
                return
            self.define(f, cols[i])
            # a lookahead inside define may have merged cosets
            f, b = self.rep(f), self.rep(b)

    def merge(self, k, l, queue):
        k, l = self.rep(k), self.rep(l)
        if k != l:
            lo, hi = min(k, l), max(k, l)
            self.parent[hi] = lo
            self.live -= 1
            queue.append(hi)

    def coincidence(self, a, b):
        t = self.table
        queue = []
        self.merge(a, b, queue)
        q = 0
        while q < len(queue):
            e = queue[q]
            q += 1
            for x in range(2 * self.n):
                f = t[e][x]
                if f is None:
                    continue
                ix = self.inv_col(x)
                if t[f][ix] == e:
                    t[f][ix] = None
                e1, f1 = self.rep(e), self.rep(f)
                if t[e1][x] is not None:
                    self.merge(f1, t[e1][x], queue)
                elif t[f1][ix] is not None:
                    self.merge(e1, t[f1][ix], queue)
                else:
                    t[e1][x] = f1
                    t[f1][ix] = e1

    def run(self, subgroup):
        for w in subgroup:
            self.scan(0, w)
        c = 0
        while c < len(self.table):
            for r in self.rels:
                if not self.alive(c):
                    break
                self.scan(c, r)
            for x in range(2 * self.n):
                if self.alive(c) and self.table[c][x] is None:
                    self.define(c, x)
            c += 1

    def standardized(self):
        t = self.table
        order = {0: 0}
        queue = [0]
        for c in queue:
            for x in range(2 * self.n):
                d = self.rep(t[c][x])
                if d not in order:
                    order[d] = len(order)
                    queue.append(d)
        rows = tuple(tuple(order[self.rep(t[c][x])] for x in range(2 * self.n)) for c in queue)
        return CosetTable(rows, self.n)


class _Full(Exception):
    pass


def todd_coxeter(pres, subgroup_words=(), max_cosets=10**5):
    """Index(n) of <subgroup_words> in the presented group, or Overflow."""
    if max_cosets < 1:
        raise ValueError("max_cosets must be >= 1")
    subgroup = [pres.word(w) if isinstance(w, str) else free_reduce(w) for w in subgroup_words]
    en = _Enumerator(pres, max_cosets)
    try:
        en.run(subgroup)
    except _Full:
        return Overflow(max_cosets, en.defined)
    table = en.standardized()
    return Index(len(table.rows), table)


def group_order(pres, max_cosets=10**5):
    res = todd_coxeter(pres, (), max_cosets)
    return res.n if isinstance(res, Index) else None


# -- the quotient of the Mostow group by K -----------------------------------


def _full_quotient(p):
    rels = [f"R1^{p}", f"R2^{p}", f"R3^{p}", "J^3"]
    rels += ["R1 R2 R1 R2^-1 R1^-1 R2^-1", "R2 R3 R2 R3^-1 R2^-1 R3^-1", "R3 R1 R3 R1^-1 R3^-1 R1^-1"]
    rels += ["J R1 J^-1 R2^-1", "J R2 J^-1 R3^-1", "J R3 J^-1 R1^-1"]
    rels += ["J R1 R3", "J R2 R1", "J R3 R2"]
    return Presentation(("J", "R1", "R2", "R3"), rels, "group mod K (extra relators of the lattice omitted)")


def quotient_chain(p):
    """Tietze steps from <J, R1, R2, R3 | ...> / K down to <J, R1 | ...>.

    Each step is (description, Presentation); the extra relators of the
    lattice itself are omitted throughout, which can only enlarge the
    quotient, so the final order bounds |group / K|.
    """
    if p not in (3, 4, 5):
        raise ValueError("p must be 3, 4 or 5")
    steps = [("relations of the group, the three conjugation relations, and the K generators J R_i R_(i-1) killed", _full_quotient(p))]
    # R2 = J R1 J^-1, R3 = J^-1 R1 J
    r2, r3 = "(J R1 J^-1)", "(J^-1 R1 J)"
    sub = lambda s: s.replace("R2", r2).replace("R3", r3)
    rels = [f"R1^{p}", "J^3", f"{r2}^{p}", f"{r3}^{p}"]
    rels += [sub("R1 R2 R1 R2^-1 R1^-1 R2^-1"), sub("R2 R3 R2 R3^-1 R2^-1 R3^-1"), sub("R3 R1 R3 R1^-1 R3^-1 R1^-1")]
    rels += [sub("J R3 J^-1 R1^-1")]
    rels += [sub("J R1 R3"), sub("J R2 R1"), sub("J R3 R2")]
    steps.append(("eliminate R2 = J R1 J^-1 and R3 = J^-1 R1 J", Presentation(("J", "R1"), rels)))
    rels = [f"R1^{p}", "J^3", "(J^-1 R1)^2"] + rels[4:7]
    steps.append(
        (
            "drop conjugates of R1^p; J R2 R1 = J^2 R1 J^-1 R1 = (J^-1 R1)^2 given J^3, and J R1 R3, J R3 R2 are its conjugates",
            Presentation(("J", "R1"), rels),
        )
    )
    steps.append(
        (
            "braid relators follow from (J^-1 R1)^2 = J^3 = 1",
            Presentation(("J", "R1"), [f"R1^{p}", "J^3", "(J^-1 R1)^2"], f"(2,3,{p}) von Dyck group"),
        )
    )
    return steps


def quotient_presentation(p):
    return quotient_chain(p)[-1][1]


def verify_quotient_chain(p, max_cosets=10**4):
    """Enumerate every stage of the chain; all orders must agree."""
    checks = []
    orders = []
    for k, (desc, pres) in enumerate(quotient_chain(p)):
        res = todd_coxeter(pres, (), max_cosets)
        n = res.n if isinstance(res, Index) else None
        orders.append(n)
        checks.append(
            Check(
                f"fpgroup.quotient(p={p}).stage{k}",
                "group mod K is a quotient of the (2,3,p) triangle group",
                n is not None,
                {"step": desc, "presentation": str(pres), "order": n if n is not None else "overflow", "max_cosets": max_cosets},
            )
        )
    expected = {3: 12, 4: 24, 5: 60}[p]
    checks.append(
        Check(
            f"fpgroup.quotient(p={p}).order",
            "the (2,3,p) triangle group is finite, so K has finite index",
            all(n == expected for n in orders),
            {"orders": orders, "von_dyck_order": expected, "bound": f"[group : K] <= {expected}"},
        )
    )
    return checks


# -- identities as matrices ----------------------------------------------------


def _ijk(i):
    k = i % 3 + 1
    j = (i + 1) % 3 + 1
    return i, j, k


def verify_K_normal(g):
    """Four conjugation identities showing K = <J R_i R_j> is normal."""
    tag = f"fpgroup.K_normal{g.params.key}"
    checks = []
    for i in (1, 2, 3):
        i, j, k = _ijk(i)
        x = g.word(f"J R{i} R{j}")
        xinv = x.inverse()
        ri, rj, rk = g.gens[f"R{i}"], g.gens[f"R{j}"], g.gens[f"R{k}"]
        y = g.word(f"J R{j} R{k}")
        z = g.word(f"J R{k} R{i}")
        cases = [
            ("Ri", f"R{i} (J R{i} R{j}) R{i}^-1 = J R{i} R{j}", ri @ x @ ri.inverse(), x),
            ("Rk", f"R{k} (J R{i} R{j}) R{k}^-1 = (J R{i} R{j})(J R{j} R{k})(J R{i} R{j})^-1", rk @ x @ rk.inverse(), x @ y @ xinv),
            ("Rj", f"R{j} (J R{i} R{j}) R{j}^-1 = J R{k} R{i}", rj @ x @ rj.inverse(), z),
            ("J", f"J (J R{i} R{j}) J^-1 = J R{k} R{i}", g.J @ x @ g.J.inverse(), z),
        ]
        for name, text, lhs, rhs in cases:
            checks.append(Check(f"{tag}.i{i}.{name}", "K is normal", proj_equal(lhs, rhs), {"identity": text}))
    return checks


HYBRID_WORDS = (
    ("JR2R1", "J R2 R1", "(R3 J) R1", None),
    ("JR3R2", "J R3 R2", "R1 (R3 J)", None),
    ("J", "J", "(R3 J)^-1 (J R3^-1)^-1", "used where the v321 stabilizer is considered (small phase)"),
)


def verify_hybrid_words(g):
    """Words expressing K generators and J through the hybrid's generators."""
    tag = f"fpgroup.hybrid_words{g.params.key}"
    checks = []
    for name, lhs, rhs, scope in HYBRID_WORDS:
        cert = {"identity": f"{lhs} = {rhs}"}
        if scope:
            cert["scope"] = scope
            cert["phase"] = g.phase.value
        checks.append(Check(f"{tag}.{name}", "hybrid generator words", proj_equal(g.word(lhs), g.word(rhs)), cert))
    return checks
