"""Independent oracles: deliberately naive reimplementations used only to
cross-check the package.  Nothing here calls into forestlink internals."""

from itertools import combinations


def cofactor_determinant(rows):
    """Recursive Laplace expansion along the first row."""
    n = len(rows)
    if n == 0:
        return 1
    if n == 1:
        return rows[0][0]
    total = 0
    for j, entry in enumerate(rows[0]):
        if entry == 0:
            continue
        sub = [r[:j] + r[j + 1 :] for r in rows[1:]]
        total += (1 if j % 2 == 0 else -1) * entry * cofactor_determinant(sub)
    return total


def all_perfect_matchings(n_points):
    """Every perfect matching of 1..n_points as sorted pair tuples."""
    points = list(range(1, n_points + 1))

    def rec(remaining):
        if not remaining:
            yield ()
            return
        first = remaining[0]
        for i in range(1, len(remaining)):
            rest = remaining[1:i] + remaining[i + 1 :]
            for m in rec(rest):
                yield (tuple(sorted((first, remaining[i]))),) + m

    for m in rec(points):
        yield tuple(sorted(m))


def noncrossing(matching):
    for i, (a, b) in enumerate(matching):
        for c, d in matching[i + 1 :]:
            if a < c < b < d or c < a < d < b:
                return False
    return True


def spanning_tree_weight_bfs(vertices, edges):
    """Tree weight by edge-subset enumeration with BFS connectivity.

    A subset of n-1 non-loop edges spanning a connected graph on n vertices
    is a spanning tree, so no acyclicity machinery is needed.
    """
    verts = sorted(set(vertices))
    n = len(verts)
    if n == 0:
        return 0
    nonloops = [(u, v, w) for (u, v, w) in edges if u != v]
    total = 0
    for combo in combinations(nonloops, n - 1):
        adj = {v: [] for v in verts}
        for u, v, _ in combo:
            adj[u].append(v)
            adj[v].append(u)
        seen = {verts[0]}
        stack = [verts[0]]
        while stack:
            for y in adj[stack.pop()]:
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
        if len(seen) != n:
            continue
        product = 1
        for _, _, w in combo:
            product *= w
        total += product
    return total
