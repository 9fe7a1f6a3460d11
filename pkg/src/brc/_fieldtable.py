"""Generated by scripts/gen_field_table.py -- do not edit."""

# w -> (reduction polynomial incl. x^w, smallest primitive element)
FIELD_TABLE = {
    8: (0x11b, 3),
    10: (0x409, 2),
    12: (0x1009, 3),
    14: (0x4021, 7),
    16: (0x1002b, 3),
    18: (0x40009, 10),
    20: (0x100009, 2),
    22: (0x400003, 2),
    24: (0x100001b, 2),
    26: (0x400001b, 3),
    28: (0x10000003, 7),
    30: (0x40000003, 19),
    32: (0x10000008d, 3),
    34: (0x40000001b, 3),
    36: (0x1000000035, 3),
    38: (0x4000000063, 2),
    40: (0x10000000039, 2),
    42: (0x40000000027, 6),
    44: (0x100000000021, 7),
    46: (0x400000000003, 7),
    48: (0x100000000002d, 3),
    50: (0x400000000001d, 2),
    52: (0x10000000000009, 2),
    54: (0x4000000000007d, 2),
    56: (0x100000000000095, 2),
    58: (0x400000000000063, 2),
    60: (0x1000000000000003, 2),
    62: (0x4000000000000069, 2),
    64: (0x1000000000000001b, 2),
    66: (0x40000000000000009, 3),
    68: (0x1000000000000000a3, 2),
    70: (0x40000000000000002b, 2),
    72: (0x100000000000000005f, 2),
    74: (0x4000000000000000047, 7),
    76: (0x10000000000000000035, 2),
    78: (0x4000000000000000005f, 3),
    80: (0x1000000000000000000af, 2),
    82: (0x4000000000000000000d7, 6),
    84: (0x1000000000000000000021, 25),
    86: (0x4000000000000000000065, 2),
    88: (0x1000000000000000000003f, 3),
    90: (0x4000000000000000000002d, 2),
    92: (0x100000000000000000000065, 2),
    94: (0x400000000000000000000063, 2),
    96: (0x100000000000000000000006f, 7),
    98: (0x4000000000000000000000099, 11),
    100: (0x10000000000000000000000065, 7),
    102: (0x40000000000000000000000069, 2),
    104: (0x10000000000000000000000001b, 6),
    106: (0x400000000000000000000000063, 2),
    108: (0x1000000000000000000000000053, 6),
    110: (0x4000000000000000000000000053, 2),
    112: (0x10000000000000000000000000039, 6),
    114: (0x4000000000000000000000000002d, 3),
    116: (0x100000000000000000000000000017, 3),
    118: (0x400000000000000000000000000065, 2),
    120: (0x100000000000000000000000000001b, 3),
    122: (0x4000000000000000000000000000047, 2),
    124: (0x1000000000000000000000000000007d, 3),
    126: (0x40000000000000000000000000000095, 2),
    128: (0x100000000000000000000000000000087, 2),
}
