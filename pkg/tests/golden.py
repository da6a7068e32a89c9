"""Worked examples transcribed verbatim: trail lines and partial-difference lists.

Trail strings ending in ``…`` are elided in the source; only the shown
prefix and the last two entries are compared.
"""

K10X6 = {
    "trails": [
        "[0,19,1,17,3,15,6,14,8,12]_10",
        "[0,29,1,28,2,27,3,26,4,25]_10",
        "[0,3]_2",
        "[0,7]_2",
        "[0,13]_2",
        "[0]_17",
    ],
    "partials": [
        [19, 18, 16, 14, 12, 9, 8, 6, 4, 2],
        [29, 28, 27, 26, 25, 24, 23, 22, 21, 15],
        [3, 1],
        [7, 5],
        [13, 11],
        [17],
    ],
    "orbit_lengths": [10, 10, 2, 2, 2, 1],
    "cycles": 27,
    "edges": 1620,
}

K2X14 = {
    "lines": {
        "C_0": "[0,3]_2",
        "C_1": "[0,7]_2",
        "C_2": "[0,11]_2",
        "C'": "[0]_13",
    },
    "expanded": {
        "C_0": (0, 3, 2, 5, 4, 7, 6, 9, 8, 11, 10, 13, 12, 15, 14, 17, 16, 19, 18, 21,
                20, 23, 22, 25, 24, 27, 26, 1),
        "C_1": (0, 7, 2, 9, 4, 11, 6, 13, 8, 15, 10, 17, 12, 19, 14, 21, 16, 23, 18, 25,
                20, 27, 22, 1, 24, 3, 26, 5),
        "C_2": (0, 11, 2, 13, 4, 15, 6, 17, 8, 19, 10, 21, 12, 23, 14, 25, 16, 27, 18, 1,
                20, 3, 22, 5, 24, 7, 26, 9),
        "C'": (0, 13, 26, 11, 24, 9, 22, 7, 20, 5, 18, 3, 16, 1, 14, 27, 12, 25, 10, 23,
               8, 21, 6, 19, 4, 17, 2, 15),
    },
    "partials": [(["C", "C'"], list(range(1, 14, 2)))],
}

K18X4 = {
    "lines": {
        "A_{0,1}": "[0,3]_2",
        "A_{0,2}": "[0,7]_2",
        "A_{0,3}": "[0,11]_2",
        "A_{0,4}": "[0,15]_2",
        "A_{0,5}": "[0,21]_2",
        "A_{0,6}": "[0,25]_2",
        "A_{0,7}": "[0,29]_2",
        "A_{0,8}": "[0,33]_2",
        "B_{0,1}": "[0,35,1,33,3,31,5,29,7,27,10,26,12,24,14,22,16,20]_18",
    },
    "partials": [
        (["A_{0,*}"], list(range(1, 16, 2)) + list(range(19, 34, 2))),
        (["B_{0,*}"], list(range(2, 17, 2)) + list(range(20, 35, 2)) + [17, 35]),
    ],
}

K72X8 = {
    "lines": {
        "A_{0,1}": "[0,3]_2",
        "A_{0,2}": "[0,7]_2",
        "A_{0,3}": "[0,11]_2",
        "A_{0,4}": "[0,15]_2",
        "A_{0,5}": "[0,21]_2",
        "A_{0,6}": "[0,25]_2",
        "A_{0,7}": "[0,29]_2",
        "A_{0,8}": "[0,33]_2",
        "B_{0,1}": "[0,35,1,33,3,31,5,29,7,27,10,26,12,24,14,22,16,20]_18",
        "B_{0,2}": "[0,71,1,70,2,69,3,68,…,17,54]_36",
        "B_{0,3}": "[0,143,1,142,2,141,3,140,…,35,108]_72",
        "A_{1,1}": "[0,147]_2",
        "A_{1,2}": "[0,151]_2",
        "A_{1,3}": "[0,155]_2",
        "A_{1,4}": "[0,159]_2",
        "A_{1,5}": "[0,165]_2",
        "A_{1,6}": "[0,169]_2",
        "A_{1,7}": "[0,173]_2",
        "A_{1,8}": "[0,177]_2",
        "B_{1,1}": "[0,179,1,177,3,175,5,173,7,171,10,170,12,168,14,166,16,164]_18",
        "B_{1,2}": "[0,215,1,214,2,213,3,212,…,17,198]_36",
        "B_{1,3}": "[0,287,1,286,2,285,3,284,…,35,252]_72",
    },
    "partials": [
        (["A_{0,*}", "B_{0,*}"], list(range(1, 72)) + list(range(73, 144))),
        (["A_{1,*}", "B_{1,*}"], list(range(145, 216)) + list(range(217, 288))),
    ],
}

K6X14 = {
    "lines": {
        "A_{0,1}": "[0,3]_2",
        "A_{0,2}": "[0,9]_2",
        "B_0": "[0,11,1,9,4,8]_6",
        "B_1": "[0,23,1,21,4,20]_6",
        "C_{2,1}": "[0,33]_2",
        "C_{2,2}": "[0,39]_2",
        "D_2": "[0,41,1,39,4,38]_6",
        "E_1": "[0,15]_2",
        "F": "[0,29,1,28,2,27]_6",
        "G": "[0]_19",
    },
    "partials": [
        (["A_{0,*}"], [1, 3, 7, 9]),
        (["B"], [2, 4, 5, 8, 10, 11, 14, 16, 17, 20, 22, 23]),
        (["C_{2,*}"], [31, 33, 37, 39]),
        (["D"], [32, 34, 35, 38, 40, 41]),
        (["E"], [13, 15]),
        (["F"], [21, 25, 26, 27, 28, 29]),
        (["G"], [19]),
    ],
    "nu": 19,
    "kappa": 1,
}

K10X10 = {
    "lines": {
        "A_{0,1}": "[0,3]_2",
        "A_{0,2}": "[0,7]_2",
        "A_{0,3}": "[0,13]_2",
        "A_{0,4}": "[0,17]_2",
        "B_0": "[0,19,1,17,3,15,6,14,8,12]_10",
        "B_1": "[0,39,1,37,3,35,6,34,8,32]_10",
        "E_1": "[0,23]_2",
        "E_2": "[0,27]_2",
        "E_3": "[0,33]_2",
        "F": "[0,49,1,48,2,47,3,46,4,45]_10",
        "G": "[0]_37",
    },
    "partials": [
        (["A_{0,*}"], [1, 3, 5, 7, 11, 13, 15, 17]),
        (["B"], [2, 4, 6, 8, 9, 12, 14, 16, 18, 19, 22, 24, 26, 28, 29, 32, 34, 36, 38, 39]),
        (["E"], [21, 23, 25, 27, 31, 33]),
        (["F"], [35, 41, 42, 43, 44, 45, 46, 47, 48, 49]),
        (["G"], [37]),
    ],
    "nu": 37,
    "kappa": 1,
}

DEMO_GOLDEN = {
    "k2x14": (2, 14, K2X14),
    "k18x4": (18, 4, K18X4),
    "k72x8": (72, 8, K72X8),
    "k6x14": (6, 14, K6X14),
    "k10x10": (10, 10, K10X10),
}


def line_matches(shown: str, golden: str) -> bool:
    """Exact match, or prefix/tail match for an elided golden line."""
    if "…" not in golden:
        return shown == golden
    head, tail = golden.split("…")
    head_tokens = head.strip("[,").split(",")
    tail_body, tail_stride = tail.lstrip(",").split("]")
    body, stride = shown.lstrip("[").split("]")
    tokens = body.split(",")
    return (
        stride == tail_stride
        and tokens[: len(head_tokens)] == head_tokens
        and tokens[-2:] == tail_body.split(",")
    )
