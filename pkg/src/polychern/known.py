"""Published Chern numbers used by ``verify --lengths``.

The pentagon tables list ``Ch(i) Ch(j)`` for one representative of each
chamber with nonempty moduli space (up to relabelling); the quadrilateral
entries list ``Ch(1..4)`` for the two chambers with decreasing lengths.
"""

PENTAGON_TABLES: dict[str, list[list[int]]] = {
    "3,1,1,1,1": [
        [1, -1, -1, -1, -1],
        [-1, 1, 1, 1, 1],
        [-1, 1, 1, 1, 1],
        [-1, 1, 1, 1, 1],
        [-1, 1, 1, 1, 1],
    ],
    "2,1,1,1,eps": [
        [0, 0, 0, 0, -2],
        [0, 0, 0, 0, 2],
        [0, 0, 0, 0, 2],
        [0, 0, 0, 0, 2],
        [-2, 2, 2, 2, 0],
    ],
    "3,2,2,1,1": [
        [-1, 1, 1, -1, -1],
        [1, -1, -1, 1, 1],
        [1, -1, -1, 1, 1],
        [-1, 1, 1, -1, 3],
        [-1, 1, 1, 3, -1],
    ],
    "2,2,1,1,1": [
        [-2, 2, 0, 0, 0],
        [2, -2, 0, 0, 0],
        [0, 0, -2, 2, 2],
        [0, 0, 2, -2, 2],
        [0, 0, 2, 2, -2],
    ],
    "1,1,1,1,1": [
        [-3, 1, 1, 1, 1],
        [1, -3, 1, 1, 1],
        [1, 1, -3, 1, 1],
        [1, 1, 1, -3, 1],
        [1, 1, 1, 1, -3],
    ],
    "1,1,1,eps,eps": [
        [0, 0, 0, 0, 0],
        [0, 0, 0, 0, 0],
        [0, 0, 0, 0, 0],
        [0, 0, 0, 0, 4],
        [0, 0, 0, 4, 0],
    ],
}

QUADRILATERAL_CHERN: dict[str, tuple[int, int, int, int]] = {
    # l1 > l2 > l3 > l4 and l2 + l3 > l1 + l4
    "4,7/2,3,2": (0, 0, 0, 2),
    # l1 > l2 > l3 > l4 and l2 + l3 < l1 + l4
    "21/5,3,2,1": (-1, 1, 1, 1),
}
