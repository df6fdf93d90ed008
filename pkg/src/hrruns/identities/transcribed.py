"""Published constants, transcribed verbatim.

Decompositions are stored as ``(c, a, b)`` triples meaning ``c x^a (1+x)^b``;
plain polynomials as ascending coefficient tuples.  Nothing here is computed,
so a mismatch against enumeration is a finding about the transcription
source, not about the code.
"""

D_TABLE = {
    1: (1,),
    2: (1,),
    3: (1, 1),
    4: (1, 4),
    5: (1, 11, 4),
    6: (1, 26, 34),
    7: (1, 57, 180, 34),
}

D_TABLE_SCALED = {  # 2^k d_{n,k}
    1: (1,),
    2: (1,),
    3: (1, 2),
    4: (1, 8),
    5: (1, 22, 16),
    6: (1, 52, 136),
    7: (1, 114, 720, 272),
}

EULER = {1: 1, 2: 1, 3: 2, 4: 5, 5: 16, 6: 61, 7: 272}

R_A = {
    1: ((1, 1, 0),),
    2: ((2, 1, 0),),
    3: ((2, 1, 1), (2, 2, 0)),
    4: ((2, 1, 2), (8, 2, 1)),
    5: ((2, 1, 3), (22, 2, 2), (8, 3, 1)),
    6: ((2, 1, 4), (52, 2, 3), (68, 3, 2)),
}

M_A = {  # coefficients of M_n / 2
    3: (0, 1, 2),
    4: (0, 1, 5),
    5: (0, 1, 3, 4),
    6: (0, 1, 28, 61),
}

R_B_TABLE = {  # n: (R^B, R^{B,>}, R^{B,<})
    2: ((0, 2, 6), (0, 1, 3), (0, 1, 3)),
    3: ((0, 2, 24, 22), (0, 1, 12, 11), (0, 1, 12, 11)),
    4: ((0, 2, 78, 190, 114), (0, 1, 39, 95, 57), (0, 1, 39, 95, 57)),
}

T_B = {
    1: (0, 1),
    2: (0, 1, 2),
    3: (0, 1, 10),
    4: (0, 1, 36, 20),
}

B_GAMMA = {  # gamma coefficients of B_n in {t^j (1+t)^(n-2j)}
    1: (1,),
    2: (1, 4),
    3: (1, 20),
    4: (1, 72, 80),
}

R_D_TABLE = {  # n: (R^D, R^{D,>}, R^{D,<})
    2: ((0, 2, 2), (0, 1, 1), (0, 1, 1)),
    3: ((0, 1, 12, 11), (0, 1, 6, 5), (0, 0, 6, 6)),
    4: ((0, 2, 38, 94, 58), (0, 1, 19, 47, 29), (0, 1, 19, 47, 29)),
}

R_D = {
    2: ((2, 1, 1),),
    3: ((1, 1, 2), (10, 2, 1)),
    4: ((2, 1, 3), (32, 2, 2), (24, 3, 1)),
    5: ((1, 1, 4), (116, 2, 3), (244, 3, 2)),
    6: ((2, 1, 5), (332, 2, 4), (1804, 3, 3), (448, 4, 2)),
}

ANDRE_4 = ((1, 2, 3, 4), (2, 1, 3, 4), (2, 3, 1, 4), (3, 1, 2, 4), (1, 3, 2, 4))
ANDRE_B_2 = ((1, 2), (-1, 2), (-2, 1))
