"""Published values used as fixtures by the verify suites, the bench and the tests."""

P_VALUES = {
    10: 42,
    50: 204226,
    100: 190569292,
    200: 3972999029388,
    500: 2300165032574323995027,
    1000: 24061467864032622473692149727991,
}

# p(21) = 21 + 330 + 407 + 34
WORKED_N = 21
WORKED_LEVELS = {1: 21, 2: 330, 3: 407, 4: 34}
WORKED_TOTAL = 792
# (level, (a_3, ..., a_k)) -> value at n = 21
WORKED_INNER = {
    (3, (1,)): 140,
    (3, (2,)): 140,
    (3, (3,)): 90,
    (3, (4,)): 32,
    (3, (5,)): 5,
    (4, (1, 1)): 20,
    (4, (2, 1)): 10,
    (4, (1, 2)): 4,
}

# table of S_k(n) for n = 1..16; row key is (level, index vector) with () for
# whole levels 1 and 2; only populated cells are listed
S_TABLE = {
    (1, ()): {n: n for n in range(1, 17)},
    (2, ()): dict(zip(range(4, 17), [1, 2, 5, 8, 14, 20, 30, 40, 55, 70, 91, 112, 140])),
    (3, (1,)): dict(zip(range(9, 17), [1, 2, 5, 8, 14, 20, 30, 40])),
    (3, (2,)): dict(zip(range(12, 17), [2, 4, 10, 16, 28])),
    (3, (3,)): {15: 3, 16: 6},
    (4, (1, 1)): {16: 1},
}

# coefficient lists of [4, k] and [6, k]
QBINOM_FIXTURES = {
    (4, 0): [1],
    (4, 1): [1, 1, 1, 1],
    (4, 2): [1, 1, 2, 1, 1],
    (4, 3): [1, 1, 1, 1],
    (4, 4): [1],
    (6, 0): [1],
    (6, 1): [1, 1, 1, 1, 1, 1],
    (6, 2): [1, 1, 2, 2, 3, 2, 2, 1, 1],
    (6, 3): [1, 1, 2, 3, 3, 3, 3, 2, 1, 1],
    (6, 4): [1, 1, 2, 2, 3, 2, 2, 1, 1],
    (6, 5): [1, 1, 1, 1, 1, 1],
    (6, 6): [1],
}

# witnesses printed for [6, 3] at q^3 and [6, 2] at q^4 (ascending digit strings)
WITNESSES_6_3_Q3 = {"1144", "1234", "2224"}
WITNESSES_6_2_Q4 = {"11333", "12233", "22223"}
