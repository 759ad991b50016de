"""Published dim HH^t rows for (k, m-k, 2, 2), degrees 3 down to -15."""

TABLE1_DEGREES = tuple(range(3, -16, -1))

# keyed by (m, k)
TABLE1 = {
    (4, 2): (1, 0, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1),
    (5, 2): (2, 0, 1, 1, 0, 0, 0, 0, 1, 1, 0, 0, 1, 1, 0, 0, 0, 0, 1),
    (6, 2): (3, 0, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1),
    (7, 2): (4, 0, 1, 1, 1, 1, 0, 0, 0, 0, 1, 1, 1, 1, 0, 0, 1, 1, 1),
    (6, 3): (4, 0, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2),
    (7, 3): (6, 0, 2, 2, 0, 0, 1, 1, 1, 1, 0, 0, 2, 2, 0, 0, 2, 2, 0),
    (8, 3): (8, 0, 2, 2, 1, 1, 0, 0, 2, 2, 0, 0, 1, 1, 2, 2, 0, 0, 2),
    (8, 4): (9, 0, 3, 3, 3, 3, 3, 3, 3, 3, 3, 3, 3, 3, 3, 3, 3, 3, 3),
}
