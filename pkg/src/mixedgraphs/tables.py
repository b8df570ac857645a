"""Reference data: the published extremal strings, bounds and matrices.

TABLE2_STRINGS are the 27 largest (1,1,4)-mixed regular graphs in bare
digraph6 form (no '&' prefix); the first one is the dihedral Cayley graph.
"""

from __future__ import annotations

TABLE2_STRINGS = (
    "MW?H??GC@_?EAO??E?_O?B@_??L_??W?@_",
    "MW?H??K??_QC??o?I??oCC??oGH@?ACH??",
    "MW?H??K??_QC??o?@c?_CC??oE?I??EH??",
    "MW?H??K??_QC??o?B?A_CC??sC?AAACH??",
    "MW?H??K??_QC??o?BC?_CC??oCIA??K@_?",
    "MW?H??G@@_?E?OA?E?_O?B?oG?OCG?KE??",
    "MW?H??G@@_?E?OA?E?_O?B@_G?O?W?WE??",
    "MW?H??G@@_?E?OA?E?_O?B__?OO?W?WE??",
    "MW?H??G@@_?EAO??E?_O?B?__OO?W?WE??",
    "MW?H??G@@_?EAO??E?_O?B?_c?O?W?WAO?",
    "MW?H??G@@_?EAO??E?_O?B@_??W?W?WE??",
    "MW?H??G@@_?EAO??E?_O?B@_??X?G?WA@?",
    "MW?H??G@@_?EAO??E?_O?BO_??W?W?WAO?",
    "MW?H??G@@_?EAO??E?_O?BO_??WCG?WA@?",
    "MW?H??GC@_?E?OA?E?_O?B?o?OD_?_G?@_",
    "MW?H??GC@_?E?OA?E?_O?B@_?CD_?_G?@_",
    "MW?H??GC@_?E?OA?E?_O?B@_G?D_??W?@_",
    "MW?H??GC@_?E?OA?E?_O?B__?OD_??W?@_",
    "MW?H??GC@_?E?P??E?_O?B__??L_??K?O_",
    "MW?H??GC@_?EAO??E?_O?B?o??Kc??KC?_",
    "MW?H??K??OQG?@_?E?OO?B__C?O?IAG@@?",
    "MW?H??K??_Q@?@_?E?OO?BO_??WGG?WH??",
    "MW?H??K??_U??@_?E?OO?B?___O?W?WH??",
    "MW?H??K??_U??@_?E?OO?B?_g?O?W?W@_?",
    "MW?H??K??`A@?@_?E?OO?BO_??MO?AG?C_",
    "MW?H??GO@_?E?OO?B?_O?BW???MA?@G?C_",
    "MW?H??GC@_?E?OO?A__O?B_?OK?c?OG?@_",
)

# k: (lower bound, upper bound, Moore bound) for (1,1,k)-mixed graphs
TABLE4 = {
    2: (6, 6, 6),
    3: (10, 10, 11),
    4: (14, 14, 19),
    5: (24, 26, 32),
    6: (34, 48, 53),
    7: (54, 78, 87),
    8: (72, 126, 142),
    9: (112, 206, 231),
    10: (144, 336, 375),
    11: (240, 544, 608),
    12: (336, 882, 985),
    13: (544, 1428, 1595),
    14: (800, 2312, 2582),
    15: (1024, 3744, 4179),
    16: (1600, 6058, 6763),
}

TABLE4_LOWER = {k: row[0] for k, row in TABLE4.items()}
TABLE4_UPPER = {k: row[1] for k, row in TABLE4.items()}
TABLE4_MOORE = {k: row[2] for k, row in TABLE4.items()}

# vertex order under which the 8-vertex graph with all binary strings x0|x1x2
# reproduces the published adjacency matrix (self-loops on first and last)
GPLUS2_VERTEX_ORDER = (
    "0|00", "1|00", "1|01", "0|01", "0|10", "1|10", "1|11", "0|11",
)

GPLUS2_A = (
    (1, 1, 0, 0, 0, 0, 0, 0),
    (1, 0, 1, 0, 0, 0, 0, 0),
    (0, 0, 0, 1, 0, 0, 1, 0),
    (0, 0, 1, 0, 1, 0, 0, 0),
    (0, 0, 0, 1, 0, 1, 0, 0),
    (0, 1, 0, 0, 1, 0, 0, 0),
    (0, 0, 0, 0, 0, 1, 0, 1),
    (0, 0, 0, 0, 0, 0, 1, 1),
)

GPLUS2_A4 = (
    (5, 3, 3, 1, 1, 1, 1, 1),
    (3, 3, 1, 3, 1, 1, 3, 1),
    (1, 1, 3, 1, 3, 3, 1, 3),
    (1, 1, 1, 5, 1, 3, 3, 1),
    (1, 3, 3, 1, 5, 1, 1, 1),
    (3, 1, 3, 3, 1, 3, 1, 1),
    (1, 3, 1, 1, 3, 1, 3, 3),
    (1, 1, 1, 1, 1, 3, 3, 5),
)
