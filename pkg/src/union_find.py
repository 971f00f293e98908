from collections import Counter
from typing import Dict, Hashable, List


class UnionFind:
    """
    Disjoint-set forest with union by rank and path compression, used to
    merge overlapping sets of a family into overlap classes.

    Examples
    --------
    >>> uf = UnionFind()
    >>> uf.union(1, 2)
    >>> uf.union(2, 3)
    >>> uf.union(4, 5)
    >>> uf.find(3) == uf.find(1)
    True
    >>> uf.find(4) == uf.find(1)
    False
    >>> sorted(map(sorted, uf.components()))
    [[1, 2, 3], [4, 5]]
    """

    def __init__(self):
        self.parent: Dict[Hashable, Hashable] = {}
        self.rank = Counter()

    def find(self, x):
        if x not in self.parent:
            self.parent[x] = x
            return x

        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        # path compression
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, x, y):
        px = self.find(x)
        py = self.find(y)
        if px == py:
            return
        # attach the lower-rank tree under the other root
        if self.rank[px] < self.rank[py]:
            self.parent[px] = py
        elif self.rank[px] > self.rank[py]:
            self.parent[py] = px
        else:
            self.parent[py] = px
            self.rank[px] += 1

    def components(self) -> List[List[Hashable]]:
        """Members grouped by root, each group in insertion order."""
        groups: Dict[Hashable, List[Hashable]] = {}
        for x in self.parent:
            groups.setdefault(self.find(x), []).append(x)
        return list(groups.values())
