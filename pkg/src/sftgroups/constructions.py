"""Constructive witnesses: embeddings between clopen sets, Hopf-style range
witnesses, transpositions, the finite generating set of the index-map kernel,
index-surjectivity elements, the free-product pair, and the zipper defect.

Everything here returns explicit prefix-substitution tables whose stated
source/range contracts are verified before returning.
"""

from __future__ import annotations

from .clopen import ClopenSet
from .dimension import class_in_K
from .errors import (
    AmbientNotX,
    ClassesDiffer,
    CycleCheckFailed,
    EmptyInput,
    NoSolution,
    NotDisjoint,
    NotInAmbient,
    NotKernelVector,
    NotPrimitive,
    StepBudgetExceeded,
)
from .graphs import Graph, Word, period_and_primitivity
from .homology import displacement_matrix
from .elements import (
    FullGroupElement,
    PrefixBijection,
    identity_element,
)
from . import intlinalg as il

DEFAULT_STEP_BUDGET = 10**6


class _Budget:
    def __init__(self, limit: int | None):
        self.limit = limit if limit is not None else DEFAULT_STEP_BUDGET
        self.used = 0

    def spend(self, n: int = 1):
        self.used += n
        if self.used > self.limit:
            raise StepBudgetExceeded(f"step budget {self.limit} exhausted")


def _branch_vertex(g: Graph) -> str:
    """A vertex with out-degree >= 2 (exists: M is not a permutation)."""
    for v in g.vertices:
        if len(g.out_edges(v)) >= 2:
            return v
    raise AssertionError("valid graphs always have a branching vertex")


def _branch_distance(g: Graph, v: str) -> int:
    target = _branch_vertex(g)
    return 0 if v == target else len(g.shortest_path(v, target))


def _route(g: Graph, w: Word, target: str, pool: list[Word]) -> Word:
    """Expand w step by step toward the target vertex, keeping the partition:
    sibling words spawned along the way are appended to pool."""
    while g.terminal(w) != target:
        step = g.shortest_path(g.terminal(w), target).edges[0]
        nxt = None
        for ext in g.extensions(w):
            if ext.edges[-1] == step and nxt is None:
                nxt = ext
            else:
                pool.append(ext)
        w = nxt
    return w


def _partition_with_counts(g: Graph, root: Word, targets: dict[str, int]) -> tuple[list[Word], list[Word]]:
    """Partition the cylinder of root into cylinders so that, for each vertex,
    at least targets[v] of them end there.

    Returns (reserved, rest): reserved hits the targets exactly, and
    reserved + rest is the full partition.
    """
    total = sum(targets.values())
    if total == 0:
        return [], [root]
    hub = _branch_vertex(g)
    pool: list[Word] = []
    current = root
    while len(pool) < total:
        current = _route(g, current, hub, pool)
        children = g.extensions(current)
        current = children[0]
        pool.extend(children[1:])
    pool.append(current)
    pool.sort(key=g.word_key)
    reserved = []
    for v in g.vertices:
        for _ in range(targets.get(v, 0)):
            w = pool.pop(0)
            reserved.append(_route(g, w, v, pool))
            pool.sort(key=g.word_key)
    return reserved, pool


def split_cylinder(g: Graph, w: Word, k: int) -> list[Word]:
    """k pairwise disjoint subcylinders of the cylinder of w."""
    if k < 1:
        raise EmptyInput("need k >= 1")
    leaves = [w]
    while len(leaves) < k:
        leaves.sort(key=lambda x: (_branch_distance(g, g.terminal(x)), g.word_key(x)))
        target = leaves.pop(0)
        leaves.extend(g.extensions(target))
    leaves.sort(key=g.word_key)
    return leaves[:k]


def embed_into(a: ClopenSet, b: ClopenSet) -> PrefixBijection:
    """A compact open G-set with source a and range inside b."""
    g = a.graph
    if a.is_empty() or b.is_empty():
        raise EmptyInput("embed_into needs nonempty clopen sets")
    sources = list(a.words)
    targets = list(b.words)
    while len(targets) < len(sources):
        targets.sort(key=lambda x: (_branch_distance(g, g.terminal(x)), g.word_key(x)))
        w = targets.pop(0)
        targets.extend(g.extensions(w))
    targets.sort(key=g.word_key)
    pieces = []
    for mu, tgt in zip(sources, targets):
        rng = g.concat(tgt, g.path_between(g.terminal(tgt), g.terminal(mu)))
        if rng == mu:  # keep self-embeddings proper: detour around a cycle
            cycle = g.shortest_path(g.terminal(mu), g.terminal(mu))
            rng = g.concat(rng, cycle)
        pieces.append((rng, mu))
    table = PrefixBijection.from_pieces(g, pieces)
    assert table.source() == a and table.range_set().is_subset(b)
    return table


def doubling(a: ClopenSet) -> tuple[PrefixBijection, PrefixBijection]:
    """Two embeddings of a into itself with disjoint ranges."""
    if a.is_empty():
        raise EmptyInput("doubling needs a nonempty clopen set")
    g = a.graph
    sub1, sub2 = split_cylinder(g, a.words[0], 2)
    u = embed_into(a, ClopenSet.from_words(g, [sub1]))
    v = embed_into(a, ClopenSet.from_words(g, [sub2]))
    return u, v


# --- Hopf witness ------------------------------------------------------------


def _terminal_counts(g: Graph, words) -> list[int]:
    counts = [0] * g.n_vertices
    for w in words:
        counts[g.vertex_index(g.terminal(w))] += 1
    return counts


def _expand_selected(g: Graph, words: list[Word], counts: list[int]) -> list[Word]:
    """Replace, per vertex v, the first counts[v] words ending at v by their
    one-edge extensions; the represented clopen set is unchanged."""
    out = list(words)
    for v in g.vertices:
        need = counts[g.vertex_index(v)]
        for _ in range(need):
            pick = min((w for w in out if g.terminal(w) == v), key=g.word_key)
            out.remove(pick)
            out.extend(g.extensions(pick))
    return out


def hopf_witness(a: ClopenSet, b: ClopenSet) -> PrefixBijection:
    """A compact open G-set with source exactly a and range exactly b;
    exists precisely when the two H0 classes agree (else ClassesDiffer).

    Follows the constructive equivalence proof: refine until one source and
    one target cylinder share a terminal vertex, solve
    (M^t - id) x = b_counts - a_counts over Z, expand by the positive and
    negative parts, and match cylinders terminal-by-terminal.
    """
    g = a.graph
    if a.is_empty() or b.is_empty():
        raise EmptyInput("hopf witness needs nonempty clopen sets")
    sources = list(a.words)
    targets = list(b.words)
    match = [(m, n) for m in sources for n in targets if g.terminal(m) == g.terminal(n)]
    if match:
        mu0, nu0 = min(match, key=lambda p: (g.word_key(p[0]), g.word_key(p[1])))
    else:
        mu = min(sources, key=g.word_key)
        nu = min(targets, key=g.word_key)
        path = g.shortest_path(g.terminal(mu), g.terminal(nu))
        sources.remove(mu)
        batch = [mu]
        for _ in range(len(path)):
            batch = [ext for w in batch for ext in g.extensions(w)]
        sources.extend(batch)
        mu0, nu0 = g.concat(mu, path), nu
    zeta = g.terminal(mu0)

    a_counts = _terminal_counts(g, sources)
    b_counts = _terminal_counts(g, targets)
    growth = [[-x for x in row] for row in displacement_matrix(g)]  # M^t - id
    try:
        x = il.integer_solve(growth, [p - q for p, q in zip(b_counts, a_counts)])
    except NoSolution:
        raise ClassesDiffer("clopen sets have different H0 classes") from None
    c = [max(v, 0) for v in x]
    d = [max(-v, 0) for v in x]

    targets_needed = {v: max(c[i], d[i]) for i, v in enumerate(g.vertices)}
    reserved, rest = _partition_with_counts(g, Word(zeta), targets_needed)
    refinement = reserved + rest
    sources = [w for w in sources if w != mu0] + [g.concat(mu0, lam) for lam in refinement]
    targets = [w for w in targets if w != nu0] + [g.concat(nu0, lam) for lam in refinement]

    sources = _expand_selected(g, sources, c)
    targets = _expand_selected(g, targets, d)

    pieces = []
    for v in g.vertices:
        mus = sorted((w for w in sources if g.terminal(w) == v), key=g.word_key)
        nus = sorted((w for w in targets if g.terminal(w) == v), key=g.word_key)
        if len(mus) != len(nus):
            raise AssertionError("count matching failed after expansion")
        pieces.extend(zip(nus, mus))
    table = PrefixBijection.from_pieces(g, pieces)
    assert table.source() == a and table.range_set() == b
    return table


def transposition(a: ClopenSet, b: ClopenSet, ambient: ClopenSet) -> FullGroupElement:
    """Involution swapping a and b (equal H0 classes) and fixing the rest of
    the ambient set."""
    if a.is_empty() or b.is_empty():
        raise EmptyInput("transposition needs nonempty clopen sets")
    if not a.is_disjoint(b):
        raise NotDisjoint("the swapped sets must be disjoint")
    if not a.union(b).is_subset(ambient):
        raise NotInAmbient("swapped sets must lie inside the ambient set")
    u = hopf_witness(b, a)  # source b, range a
    fixed = a.union(b).complement_in(ambient)
    table = u.union(u.inverse()).union(PrefixBijection.identity_on(fixed))
    return FullGroupElement.from_table(table, ambient)


def gamma_transposition(g: Graph, mu: Word, nu: Word, ambient: ClopenSet) -> FullGroupElement:
    """The basic transposition swapping the cylinders of mu and nu."""
    cm = ClopenSet.from_words(g, [mu])
    cn = ClopenSet.from_words(g, [nu])
    if not cm.is_disjoint(cn):
        raise NotDisjoint("cylinders overlap")
    if not cm.union(cn).is_subset(ambient):
        raise NotInAmbient("cylinders must lie inside the ambient set")
    fixed = cm.union(cn).complement_in(ambient)
    table = PrefixBijection.from_pieces(g, [(mu, nu), (nu, mu)]).union(
        PrefixBijection.identity_on(fixed))
    return FullGroupElement.from_table(table, ambient)


# --- generating set -----------------------------------------------------------


def _words_inside(g: Graph, y: ClopenSet, length: int) -> list[Word]:
    return [w for w in g.enumerate_words(length) if y.contains_word(w)]


def _realize_class_inside(g: Graph, vec: list[int], region: ClopenSet) -> ClopenSet:
    """A clopen subset of region whose H0 class equals that of vec (possibly
    empty).

    The class has a representative with non-negative vertex counts (add
    (M^t - id) applied to sums of (M^t)^j 1, which belong to the relation
    lattice, until all entries are non-negative); realizing that
    representative avoids deep corrections for negative parts."""
    from .dimension import transition_matrix

    mt = transition_matrix(g)
    power = [1] * g.n_vertices
    y = list(vec)
    guard = 4 * g.n_vertices * g.n_vertices + 64
    for _ in range(guard):
        if all(entry >= 0 for entry in y):
            break
        power = il.mat_vec(mt, power)
        y = [v + p - 1 for v, p in zip(vec, power)]
    else:
        raise AssertionError("non-negative representative search exceeded its cap")
    if not any(y):
        return ClopenSet.empty(g)
    reserved, _ = _partition_with_counts(
        g, region.words[0], {v: y[i] for i, v in enumerate(g.vertices)})
    return ClopenSet.from_words(g, reserved)


def generating_set(y: ClopenSet, step_budget: int | None = None) -> list[FullGroupElement]:
    """The finite set F of basic transpositions generating the index-map
    kernel over y: all gamma(mu, nu) with both cylinders inside y, equal
    terminals, disjoint, and |mu| = |nu| <= m+2 or |mu| + 1 = |nu| <= m+2,
    where m = max(mixing exponent, depth of y).

    When y contains no C_pq u C_q configuration the set is built over a
    conjugate clopen set of the same class and carried back through a
    Hopf witness.
    """
    g = y.graph
    if y.is_empty():
        raise EmptyInput("generating set needs a nonempty ambient set")
    budget = _Budget(step_budget)
    period, primitive, mixing = period_and_primitivity(g)
    if not primitive:
        raise NotPrimitive(f"shift has period {period}; generating set needs a mixing shift")
    pq_pairs = [(p, q) for p, _, tp in g.edges for q in g.out_edges(tp) if q != p]
    direct = None
    for p, q in pq_pairs:
        wp = Word(g.edge_source(p), (p, q))
        wq = Word(g.edge_source(q), (q,))
        if y.contains_word(wp) and y.contains_word(wq):
            direct = (p, q)
            break
    if direct is None:
        p, q = pq_pairs[0]
        seed = ClopenSet.from_words(g, [Word(g.edge_source(p), (p, q)),
                                        Word(g.edge_source(q), (q,))])
        region = seed.complement_in(ClopenSet.whole_space(g))
        diff = class_in_K(y) - class_in_K(seed)
        extra = _realize_class_inside(g, list(diff.vec), region)
        target = seed.union(extra)
        witness = hopf_witness(y, target)  # source y, range target
        carried = []
        for element in generating_set(target, step_budget):
            conj = witness.inverse().compose(element.table).compose(witness)
            carried.append(FullGroupElement.from_table(conj, y))
        return carried

    depth = y.max_depth()
    m = max(mixing, depth)
    out = []
    words_by_len = {length: _words_inside(g, y, length) for length in range(m + 3)}
    for length in range(1, m + 3):
        ws = words_by_len[length]
        for i, mu in enumerate(ws):
            for nu in ws[i + 1:]:
                budget.spend()
                if g.terminal(mu) == g.terminal(nu):
                    out.append(gamma_transposition(g, mu, nu, y))
    for length in range(0, m + 2):
        for mu in words_by_len[length]:
            for nu in words_by_len[length + 1]:
                budget.spend()
                if g.terminal(mu) == g.terminal(nu) and not Graph.is_prefix(mu, nu):
                    out.append(gamma_transposition(g, mu, nu, y))
    return out


# --- index surjectivity -------------------------------------------------------


def realize_index_element(g: Graph, w: list[int]) -> FullGroupElement:
    """An element of the full group over X whose index class realizes the
    kernel vector w of id - M^t.

    Builds the 1-cycle sum_e w[i(e)] * 1_{U_e}, verifies the cycle condition
    at the length-1 refinement, splits it into a doubly stochastic matching,
    disjointifies ranges, and pads with the identity.
    """
    a = displacement_matrix(g)
    if il.mat_vec(a, list(w)) != [0] * g.n_vertices:
        raise NotKernelVector("w is not in Ker(id - M^t)")
    whole = ClopenSet.whole_space(g)
    if not any(w):
        return identity_element(whole)

    # orientation calibrated so that index(realize_index_element(w)) == w
    chain: list[PrefixBijection] = []
    for eid, src, dst in g.edges:
        coeff = w[g.vertex_index(src)]
        edge_word = Word(src, (eid,))
        empty_at_target = Word(dst)
        for _ in range(abs(coeff)):
            if coeff > 0:
                chain.append(PrefixBijection.from_pieces(g, [(empty_at_target, edge_word)]))
            else:
                chain.append(PrefixBijection.from_pieces(g, [(edge_word, empty_at_target)]))

    level_one = g.enumerate_words(1)
    covers_r: dict[tuple, list[int]] = {wd.edges: [] for wd in level_one}
    covers_s: dict[tuple, list[int]] = {wd.edges: [] for wd in level_one}
    for idx, piece in enumerate(chain):
        for wd in level_one:
            if piece.range_set().contains_word(wd):
                covers_r[wd.edges].append(idx)
            if piece.source().contains_word(wd):
                covers_s[wd.edges].append(idx)
    for wd in level_one:
        if len(covers_r[wd.edges]) != len(covers_s[wd.edges]):
            raise CycleCheckFailed("assembled chain violates the cycle condition")

    splitting: dict[tuple[int, int], list[Word]] = {}
    for wd in level_one:
        for i, j in zip(covers_s[wd.edges], covers_r[wd.edges]):
            splitting.setdefault((i, j), []).append(wd)

    n_terms = len(chain)
    level = 1
    while len(g.enumerate_words(level)) < n_terms:
        level += 1
    target_words = g.enumerate_words(level)[:n_terms]
    disjointifiers = [
        embed_into(piece.range_set(), ClopenSet.from_words(g, [tw]))
        for piece, tw in zip(chain, target_words)
    ]

    assembled: list = []
    for (i, j), wds in sorted(splitting.items()):
        aij = PrefixBijection.identity_on(ClopenSet.from_words(g, wds))
        vij = disjointifiers[i].compose(chain[i]).compose(aij).compose(
            disjointifiers[j].inverse())
        assembled.extend(vij.pieces)
    v = PrefixBijection.from_pieces(g, assembled)
    if v.source() != v.range_set():
        raise CycleCheckFailed("assembled G-set is not source/range balanced")
    rest = v.source().complement_in(whole)
    table = v.union(PrefixBijection.identity_on(rest))
    return FullGroupElement.from_table(table, whole)


# --- free product witness -----------------------------------------------------


def free_product_witness(g: Graph) -> tuple[FullGroupElement, FullGroupElement]:
    """Elements alpha (order 2) and beta (order 3) generating a free product:
    alpha swaps the two doubled copies of X, beta cycles three blocks; the
    ping-pong inclusions hold by construction."""
    whole = ClopenSet.whole_space(g)
    u, v = doubling(whole)
    a_set, b_set = u.range_set(), v.range_set()
    swap = v.compose(u.inverse()).union(u.compose(v.inverse()))
    fixed = a_set.union(b_set).complement_in(whole)
    alpha = FullGroupElement.from_table(
        swap.union(PrefixBijection.identity_on(fixed)), whole)

    uu = u.compose(u)
    uv = u.compose(v)
    block1 = v.compose(u.inverse()).compose(u.inverse())          # r(UU) -> B
    block2 = u.compose(PrefixBijection.identity_on(b_set))        # B -> r(UV)
    block3 = u.compose(u).compose(v.inverse()).compose(u.inverse())  # r(UV) -> r(UU)
    moving = uu.range_set().union(b_set).union(uv.range_set())
    beta_table = block1.union(block2).union(block3).union(
        PrefixBijection.identity_on(moving.complement_in(whole)))
    beta = FullGroupElement.from_table(beta_table, whole)
    return alpha, beta


# --- zipper defect -------------------------------------------------------------


def zipper_defect(alpha: FullGroupElement, step_budget: int | None = None) -> tuple[int, int]:
    """(defect, m): the symmetric-difference count of the zipper action on the
    set of cylinder classes, and m = the largest word length in the table.

    Counts admissible words of length >= 1 not contained in any domain
    cylinder, plus the same on the range side; defect >= m - 1 always.
    """
    if not alpha.ambient.is_whole_space():
        raise AmbientNotX("zipper defect is defined over the full path space")
    g = alpha.graph
    budget = _Budget(step_budget)

    def side_count(words: list[Word]) -> int:
        longest = max((len(w) for w in words), default=0)
        missed = 0
        for length in range(1, longest):
            for lam in g.enumerate_words(length):
                budget.spend()
                if not any(Graph.is_prefix(w, lam) for w in words):
                    missed += 1
        return missed

    domains = [d for _, d in alpha.table.pieces]
    ranges = [r for r, _ in alpha.table.pieces]
    defect = side_count(domains) + side_count(ranges)
    return defect, alpha.table.max_word_length()
