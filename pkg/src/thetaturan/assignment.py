"""Potential-minimizing assignments: map each (k+1)-clique to one of its
k-cliques, or each triangle to two of its three edges, minimizing the sum of
squared target loads by greedy start plus single-source swaps."""

from __future__ import annotations

from collections import Counter

from .errors import LimitError, SearchAbort
from .graphs import Graph, enumerate_cliques

SINGLE = "single"
PAIR = "pair"


class CliqueAssignment:
    """Assignment state: sources, per-source chosen target(s), target loads.

    single mode: sources are (k+1)-cliques, each choosing one of its k-clique
    subsets. pair mode: sources are triangles, each choosing two of its three
    edges. psi is the sum of squared loads over all targets.
    """

    def __init__(self, mode: str, k: int, sources, targets, choice):
        self.mode = mode
        self.k = k
        self.sources = list(sources)
        self.targets = list(targets)
        self.choice = dict(choice)
        loads = Counter()
        for src, tgt in self.choice.items():
            if mode == SINGLE:
                loads[tgt] += 1
            else:
                for e in tgt:
                    loads[e] += 1
        self.loads = {t: loads.get(t, 0) for t in self.targets}

    @property
    def psi(self) -> int:
        return sum(r * r for r in self.loads.values())

    def load_values(self) -> list[int]:
        return sorted(self.loads.values(), reverse=True)

    def dump_lines(self) -> list[str]:
        """Text dump: one 'source -> target' line per source clique plus a
        trailing load histogram."""
        out = []
        for src in self.sources:
            tgt = self.choice[src]
            if self.mode == SINGLE:
                rhs = " ".join(str(v) for v in tgt)
            else:
                rhs = " | ".join("-".join(str(v) for v in e) for e in tgt)
            out.append(" ".join(str(v) for v in src) + " -> " + rhs)
        hist = Counter(self.loads.values())
        out.append("loads: " + " ".join(f"{load}x{hist[load]}"
                                        for load in sorted(hist, reverse=True)))
        return out


def _k_subsets(clique: tuple[int, ...]):
    """The |clique| subsets obtained by dropping one vertex, ascending."""
    return [clique[:i] + clique[i + 1:] for i in range(len(clique))]


def _pair_options(tri: tuple[int, int, int]):
    """The three ways to pick two edges of a triangle, as sorted edge pairs."""
    a, b, c = tri
    e1, e2, e3 = (a, b), (a, c), (b, c)
    return [((e1, e2), e3), ((e1, e3), e2), ((e2, e3), e1)]


def _exact_min_choice(sources, mode: str) -> dict:
    """Global psi minimum by enumerating every choice vector; the minimum is
    taken over (psi, choice vector), so ties break deterministically."""
    from itertools import product as _product

    if mode == SINGLE:
        option_sets = [_k_subsets(s) for s in sources]
    else:
        option_sets = [[o[0] for o in _pair_options(s)] for s in sources]
    best = None
    best_pick = None
    for pick in _product(*(range(len(o)) for o in option_sets)):
        loads = Counter()
        for opts, i in zip(option_sets, pick):
            chosen = opts[i]
            if mode == SINGLE:
                loads[chosen] += 1
            else:
                loads[chosen[0]] += 1
                loads[chosen[1]] += 1
        psi = sum(r * r for r in loads.values())
        if best is None or psi < best or (psi == best and pick < best_pick):
            best = psi
            best_pick = pick
    return {src: option_sets[i][best_pick[i]]
            for i, src in enumerate(sources)}


_EXACT_OPTION_CAP = 20000


def minimize_psi(g: Graph, mode: str, k: int = 2) -> CliqueAssignment:
    """Assignment with no single reassignment that strictly decreases psi.

    Tiny instances (choice space up to ~2*10^4 vectors) are initialized at
    the enumerated global optimum; larger ones start from the greedy
    least-loaded choice. Either way, single-source swaps then run to a
    fixpoint, so the first-order condition always holds on return.
    Deterministic: sources in lexicographic order, ties to the
    lowest-indexed target. A graph without source cliques yields the empty
    assignment with psi = 0.
    """
    if mode not in (SINGLE, PAIR):
        raise ValueError(f"mode must be {SINGLE!r} or {PAIR!r}")
    if mode == SINGLE and k < 2:
        raise ValueError("single mode needs k >= 2")
    if mode == SINGLE and g.n > 64:
        raise LimitError("single mode limited to n <= 64")
    if mode == PAIR:
        k = 2
        sources = enumerate_cliques(g, 3)
        targets = [tuple(e) for e in g.edges()]
    else:
        sources = enumerate_cliques(g, k + 1)
        targets = enumerate_cliques(g, k)

    loads = {t: 0 for t in targets}
    choice = {}
    n_opts = 3 if mode == PAIR else k + 1
    if sources and n_opts ** len(sources) <= _EXACT_OPTION_CAP:
        choice = _exact_min_choice(sources, mode)
        for src, tgt in choice.items():
            if mode == SINGLE:
                loads[tgt] += 1
            else:
                for e in tgt:
                    loads[e] += 1
    elif mode == SINGLE:
        for src in sources:
            opts = _k_subsets(src)
            best = min(opts, key=lambda t: (loads[t], t))
            choice[src] = best
            loads[best] += 1
    else:
        for src in sources:
            opts = _pair_options(src)
            best = min(opts, key=lambda o: (loads[o[0][0]] + loads[o[0][1]], o[0]))
            choice[src] = best[0]
            for e in best[0]:
                loads[e] += 1

    # each swap strictly decreases the integer psi, so this terminates; the
    # cap only guards against implementation bugs
    m = len(sources)
    cap = 10 * m * m + 10
    swaps = 0
    improved = True
    while improved:
        improved = False
        for src in sources:
            if mode == SINGLE:
                cur = choice[src]
                # moving src from cur to alt changes psi by 2*(r(alt)-r(cur)+1)
                alt = min(_k_subsets(src), key=lambda t: (loads[t], t))
                if loads[alt] < loads[cur] - 1:
                    loads[cur] -= 1
                    loads[alt] += 1
                    choice[src] = alt
                    improved = True
                    swaps += 1
            else:
                cur_pair = choice[src]
                e_cur1, e_cur2 = cur_pair
                excluded = next(e for e in
                                ((src[0], src[1]), (src[0], src[2]), (src[1], src[2]))
                                if e not in cur_pair)
                # swapping chosen edge e_out for the excluded edge changes psi
                # by 2*(r(excluded) - r(e_out) + 1)
                for e_out in (e_cur1, e_cur2):
                    if loads[excluded] < loads[e_out] - 1:
                        loads[e_out] -= 1
                        loads[excluded] += 1
                        kept = e_cur2 if e_out == e_cur1 else e_cur1
                        choice[src] = tuple(sorted((kept, excluded)))
                        improved = True
                        swaps += 1
                        break
            if swaps > cap:
                raise SearchAbort("swap count exceeded 10*m^2; psi failed to decrease")
    return CliqueAssignment(mode, k, sources, targets, choice)


def verify_local_optimality(g: Graph, a: CliqueAssignment):
    """Check the first-order condition a psi-minimizer satisfies.

    single mode: for every source U with target W0 and every alternative
    k-subset W' of U, load(W') >= load(W0) - 1. pair mode: the excluded edge
    of every triangle satisfies load(excluded) >= max(chosen loads) - 1.
    Returns (ok, violations).
    """
    _check_structure(g, a)
    violations = []
    if a.mode == SINGLE:
        for src in a.sources:
            w0 = a.choice[src]
            r0 = a.loads[w0]
            for alt in _k_subsets(src):
                if a.loads[alt] < r0 - 1:
                    violations.append((src, w0, alt))
    else:
        for src in a.sources:
            chosen = a.choice[src]
            excluded = next(e for e in
                            ((src[0], src[1]), (src[0], src[2]), (src[1], src[2]))
                            if e not in chosen)
            bound = max(a.loads[chosen[0]], a.loads[chosen[1]]) - 1
            if a.loads[excluded] < bound:
                violations.append((src, chosen, excluded))
    return (not violations), violations


def _check_structure(g: Graph, a: CliqueAssignment) -> None:
    if a.mode == SINGLE:
        expect_sources = enumerate_cliques(g, a.k + 1)
        expect_targets = enumerate_cliques(g, a.k)
    else:
        expect_sources = enumerate_cliques(g, 3)
        expect_targets = [tuple(e) for e in g.edges()]
    if sorted(a.sources) != expect_sources:
        raise ValueError("assignment sources do not match the graph's cliques")
    if sorted(a.targets) != sorted(expect_targets):
        raise ValueError("assignment targets do not match the graph")
    for src in a.sources:
        tgt = a.choice.get(src)
        if tgt is None:
            raise ValueError(f"source {src} unassigned")
        if a.mode == SINGLE:
            if not set(tgt) <= set(src):
                raise ValueError(f"target {tgt} is not inside source {src}")
        else:
            for e in tgt:
                if not set(e) <= set(src):
                    raise ValueError(f"edge {e} is not inside triangle {src}")
            if len(tgt) != 2 or tgt[0] == tgt[1]:
                raise ValueError(f"triangle {src} must choose two distinct edges")
    # recompute loads
    loads = Counter()
    for src, tgt in a.choice.items():
        if a.mode == SINGLE:
            loads[tgt] += 1
        else:
            for e in tgt:
                loads[e] += 1
    for t in a.targets:
        if a.loads.get(t, 0) != loads.get(t, 0):
            raise ValueError(f"stored load for {t} inconsistent")


def load_profile(a: CliqueAssignment, reference_vertices: int | None = None) -> dict:
    """Histogram of loads (zeros included) plus the maximum.

    When `reference_vertices` is the order of a forbidden graph, 2x that
    value is echoed for side-by-side reading; nothing is asserted about it.
    """
    hist = Counter(a.loads.values())
    out = {
        "histogram": {int(load): int(cnt) for load, cnt in sorted(hist.items())},
        "max_load": max(a.loads.values(), default=0),
        "sources": len(a.sources),
        "targets": len(a.targets),
        "psi": a.psi,
    }
    if reference_vertices is not None:
        out["reference_two_h"] = 2 * reference_vertices
    return out
