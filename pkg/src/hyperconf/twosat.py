"""2-SAT via the implication graph and Tarjan's strongly connected components.

Literals use the DIMACS convention: variable ``i`` (0-based) is ``i + 1``,
its negation ``-(i + 1)``.
"""

from __future__ import annotations

from typing import Sequence


def _node(lit: int) -> int:
    v = abs(lit) - 1
    return 2 * v + (lit < 0)


def twosat_solve(num_vars: int, clauses: Sequence[Sequence[int]]) -> list[bool] | None:
    """Return a satisfying assignment, or ``None`` if the formula is unsatisfiable."""
    n = 2 * num_vars
    graph: list[list[int]] = [[] for _ in range(n)]
    for clause in clauses:
        if len(clause) == 0:
            return None
        if len(clause) > 2:
            raise ValueError(f"clause {tuple(clause)} has more than two literals")
        for lit in clause:
            if lit == 0 or abs(lit) > num_vars:
                raise ValueError(f"literal {lit} out of range for {num_vars} variables")
        a = clause[0]
        b = clause[1] if len(clause) == 2 else clause[0]
        graph[_node(-a)].append(_node(b))
        graph[_node(-b)].append(_node(a))

    comp = _tarjan(graph)
    out = []
    for v in range(num_vars):
        pos, neg = comp[2 * v], comp[2 * v + 1]
        if pos == neg:
            return None
        # Tarjan numbers components in reverse topological order.
        out.append(pos < neg)
    return out


def _tarjan(graph: list[list[int]]) -> list[int]:
    n = len(graph)
    index = [-1] * n
    low = [0] * n
    on_stack = [False] * n
    comp = [-1] * n
    stack: list[int] = []
    counter = 0
    ncomp = 0
    for root in range(n):
        if index[root] != -1:
            continue
        work = [(root, 0)]
        index[root] = low[root] = counter
        counter += 1
        stack.append(root)
        on_stack[root] = True
        while work:
            v, i = work[-1]
            if i < len(graph[v]):
                work[-1] = (v, i + 1)
                w = graph[v][i]
                if index[w] == -1:
                    index[w] = low[w] = counter
                    counter += 1
                    stack.append(w)
                    on_stack[w] = True
                    work.append((w, 0))
                elif on_stack[w]:
                    low[v] = min(low[v], index[w])
                continue
            work.pop()
            if work:
                parent = work[-1][0]
                low[parent] = min(low[parent], low[v])
            if low[v] == index[v]:
                while True:
                    w = stack.pop()
                    on_stack[w] = False
                    comp[w] = ncomp
                    if w == v:
                        break
                ncomp += 1
    return comp


def satisfies(assignment: Sequence[bool], clauses: Sequence[Sequence[int]]) -> bool:
    return all(any(assignment[abs(l) - 1] == (l > 0) for l in c) for c in clauses)
