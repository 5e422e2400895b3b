"""Cartesian higher integrals for k = 1..4 as printed.

Generated from the typeset source by tools/transcribe_cartesian.py; the
operator-polynomial heads are in :mod:`ttwlab.cartesian`.  Each table is a
list of (kind, (m, n), terms): kind 'anti' is the anticommutator of
dx^m dy^n with the sum of the terms, kind 'V' a multiplication operator.
A = alpha, B = beta, w = omega.
"""

Y2_BLOCKS = [
    ('V', (0, 0), [
        '- ((A)/(x^2))',
    ]),
]

Y4_BLOCKS = [
    ('anti', (2, 0), [
        '(((x^2 - y^2) B)/(x^2 y^2))',
        '- ((4(x^2 + y^2) A)/((x^2 - y^2)^2))',
    ]),
    ('anti', (1, 1), [
        '-((16xy A)/((x^2 - y^2)^2))',
    ]),
    ('anti', (0, 2), [
        '-(((x^2 - y^2) B)/(x^2 y^2))',
        '- ((4(x^2 + y^2) A)/((x^2 - y^2)^2))',
    ]),
    ('V', (0, 0), [
        '+ ((16 A ^2)/((x^2 - y^2)^2))',
        '+ (((x^2 - y^2)^2 B ^2)/(x^4 y^4))',
        '+ ((8 A B)/(x^2 y^2))',
        '- ((2(x^4 + y^4) B w ^2)/(x^2 y^2))',
    ]),
]

Y6_BLOCKS = [
    ('anti', (4, 0), [
        '-((9(-3x^4 + 6y^2x^2 + y^4) B)/(y^2(y^2 - 3x^2)^2))',
        '- ((27(x^2 + y^2)^2 A)/(2x^2(x^2 - 3y^2)^2))',
    ]),
    ('anti', (3, 1), [
        '- ((72xy B)/((y^2 - 3x^2)^2))',
        '- ((216xy A)/((x^2 - 3y^2)^2))',
    ]),
    ('anti', (2, 2), [
        '((27(-3x^4 + 6x^2y^2 + y^4) B)/((y^3 - 3x^2y)^2))',
        '- ((54(x^4 + 4x^2y^2 - y^4) A)/((x^3 - 3xy^2)^2))',
        '+ 6y^2 w ^2',
    ]),
    ('anti', (1, 3), [
        '((216xy B)/((y^2 - 3x^2)^2))',
        '+ ((72xy A)/((x^2 - 3y^2)^2))',
        '- 12xy w ^2',
    ]),
    ('anti', (0, 4), [
        '-((9 A)/(2x^2))',
        '+ 6x^2 w ^2',
    ]),
    ('anti', (2, 0), [
        '((18(3x^8 + 44y^2x^6 + 42y^4x^4 - 36y^6x^2 + 27y^8) A)/(x^4(x^2 - 3y^2)^4))',
        '+ ((81(3x^4 - 6y^2x^2 - y^4)^2 B ^2)/(2y^4(3x^2 - y^2)^4))',
        '+ ((81(3x^8 - 52y^2x^6 + 18y^4x^4 + 12y^6x^2 + 3y^8) A ^2)/(2x^4(x^2 - 3y^2)^4))',
        '+ ((2(2x^6 + 15y^2x^4 + 18y^4x^2 - 27y^6) A w ^2)/(x^2(x^2 - 3y^2)^2))',
        '+ ((162(x - y)(x + y)(3x^6 - 19y^2x^4 - 7y^4x^2 - y^6) A B)/(x^2y^2(x^2 - 3y^2)^2(3x^2 - y^2)^2))',
        '- ((54x^2(x - y)(x + y)(x^2 - 7y^2) B w ^2)/(y^2(3x^2 - y^2)^2))',
        '- 6y^4 w ^4',
    ]),
    ('anti', (1, 1), [
        '-((1152xy(x^2 + 3y^2) A)/((x^2 - 3y^2)^4))',
        '- ((648x(3x^4 - 6y^2x^2 - y^4) B ^2)/(y(y^2 - 3x^2)^4))',
        '- ((648y(x^4 + 6y^2x^2 - 3y^4) A ^2)/(x(x^2 - 3y^2)^4))',
        '- ((648(x - y)(x + y)(x^4 + 10y^2x^2 + y^4) A B)/(xy(3x^4 - 10y^2x^2 + 3y^4)^2))',
        '+ ((108x(x - y)(x + y)(x^2 + y^2) B w ^2)/(y(y^2 - 3x^2)^2))',
        '+ ((216xy(x^2 + y^2) A w ^2)/((x^2 - 3y^2)^2))',
        '+ 12xy^3 w ^4',
    ]),
    ('anti', (0, 2), [
        '((81(x^8 - 6y^4x^4 + 24y^6x^2 - 3y^8) A ^2)/(x^4(x^2 - 3y^2)^4))',
        '+ ((144(x^4 + 18y^2x^2 + 9y^4) A)/((x^2 - 3y^2)^4))',
        '+ ((2592x^2y^2 B ^2)/((3x^2 - y^2)^4))',
        '- (((23x^6 + 159y^2x^4 + 45y^4x^2 - 27y^6) A w ^2)/(x^2(x^2 - 3y^2)^2))',
        '+ ((81(x^8 - 6y^4x^4 + 56y^6x^2 - 3y^8) A B)/(x^2y^2(x^2 - 3y^2)^2(3x^2 - y^2)^2))',
        '- ((27(x^6 - 11y^2x^4 + 19y^4x^2 - y^6) B w ^2)/(y^2(3x^2 - y^2)^2))',
        '- 6x^2y^2 w ^4',
        '+ 2 w ^2',
    ]),
    ('V', (0, 0), [
        '- ((180(43x^(12) + 1914y^2x^(10) + 5805y^4x^8 + 972y^6x^6 + 405y^8x^4 - 486y^(10)x^2 + 243y^(12)) A)/(x^6(x^2 - 3y^2)^6))',
        '+ ((1296 B ^2)/((y^3 - 3x^2y)^2))',
        '+ ((1296(x^6 + 21y^2x^4 - 9y^4x^2 + 3y^6) A B)/(x^2y^2(x^2 - 3y^2)^2(3x^2 - y^2)^2))',
        '- ((729 A ^3(x^2 + y^2)^6)/(x^6(x^2 - 3y^2)^6))',
        '- ((324(5x^(12) + 30y^2x^(10) + 399y^4x^8 - 332y^6x^6 + 291y^8x^4 - 18y^(10)x^2 + 9y^(12)) A ^2)/(x^6(x^2 - 3y^2)^6))',
        '- ((1458 A ^2 B (x^2 + y^2)^6)/(x^4y^2(x^2 - 3y^2)^4(3x^2 - y^2)^2))',
        '- ((729 A B ^2(x^2 + y^2)^6)/(x^2y^4(x^2 - 3y^2)^2(3x^2 - y^2)^4))',
        '+ ((72(x^2 + y^2)^2 A w ^2)/((x^3 - 3xy^2)^2))',
        '+ ((243(x^2 + y^2)^2(x^6 - 24y^2x^4 + 21y^4x^2 - 2y^6) B ^2 w ^2)/(9x^4(x^2 - 3y^2)^4))',
        '+ ((414(x^2 + y^2)^2 A B w ^2)/(y^2(3x^2 - y^2)^2))',
        '+ ((9(x^2 + y^2)^2(19x^6 + 372y^2x^4 - 153y^4x^2 + 54y^6) A ^2 w ^2)/(x^4(x^2 - 3y^2)^4))',
        '+ ((180(x^2 + y^2)^2 B w ^2)/(y^2(3x^2 - y^2)^2))',
        '+ ((54(x - y)(x + y)(x^2 + y^2)(x^2 - 4yx + y^2)(x^2 + 4yx + y^2) B w ^4)/(y^2(3x^2 - y^2)^2))',
        '+ (((x^2 + y^2)(19x^6 + 129y^2x^4 + 9y^4x^2 + 27y^6) A w ^4)/(x^2(x^2 - 3y^2)^2))',
        '- 4y^2 w ^4',
    ]),
]

Y8_BLOCKS = [
    ('anti', (6, 0), [
        '-((32(x^2 + y^2)^3 A)/((x^4 - 6x^2 y^2 + y^4)^2))',
        '+ ((2(3x^6 - 11y^2 x^4 + y^4 x^2 - y^6) B)/(x^2 y^2 (x^2 - y^2)^2))',
    ]),
    ('anti', (5, 1), [
        '-((64xy B)/((x^2 - y^2)^2))',
        '- ((256xy(5x^4 - 2x^2 y^2 + y^4) A)/((x^4 - 6x^2 y^2 + y^4)^2))',
    ]),
    ('anti', (4, 2), [
        '-((32(11x^6 + 81x^4 y^2 - 63x^2 y^4 - 5y^6))/((x^4 - 6x^2 y^2 + y^4)^2))',
        '- ((2(19x^6 - 67y^2 x^4 + 17y^4 x^2 - 9y^6) B)/(x^2 y^2 (x^2 - y^2)^2))',
        '+ 32 w ^2 y^2',
    ]),
    ('anti', (3, 3), [
        '((512xy(3x^4 - 2x^2 y^2 + 3y^4) A)/((x^4 - 6x^2 y^2 + y^4)^2))',
        '+ ((384xy B)/((x^2 - y^2)^2))',
        '- 64 w ^2 xy',
    ]),
    ('anti', (2, 4), [
        '((32(5x^6 + 63x^4 y^2 - 81x^2 y^4 - 11y^6) A)/((x^4 - 6x^2 y^2 + y^4)^2))',
        '+ 32 w ^2 x^2',
        '+ ((2(9x^6 - 17y^2 x^4 + 67y^4 x^2 - 19y^6) B)/(x^2 y^2 (x^2 - y^2)^2))',
    ]),
    ('anti', (1, 5), [
        '-((256xy(x^4 - 2x^2 y^2 + 5y^4) A)/((x^4 - 6x^2 y^2 + y^4)^2))',
        '- ((64xy B)/((x^2 - y^2)^2))',
    ]),
    ('anti', (0, 6), [
        '-((2(x^6 - y^2 x^4 + 11y^4 x^2 - 3y^6) B)/(x^2 y^2 (x^2 - y^2)^2))',
        '- ((32(x^2 + y^2)^3 A)/((x^4 - 6x^2 y^2 + y^4)^2))',
    ]),
    ('anti', (4, 0), [
        '((384(x^2 + y^2)^2 (3x^8 + 92y^2 x^6 - 142y^4 x^4 + 92y^6 x^2 + 3y^8) A)/((x^4 - 6y^2 x^2 + y^4)^4))',
        '- ((24(3x^8 + 28y^2 x^6 - 2y^4 x^4 + 4y^6 x^2 - y^8) B)/((x^3 - xy^2)^4))',
        '+ ((256(x^8 - 10y^2 x^6 + 37y^4 x^4 - 16y^6 x^2) A w ^2)/((x^4 - 6y^2 x^2 + y^4)^2))',
        '+ ((256(3x^(12) - 182y^2 x^(10) + 205y^4 x^8 - 52y^6 x^6 + 77y^8 x^4 + 10y^(10) x^2 + 3y^(12)) A ^2)/((x^4 - 6y^2 x^2 + y^4)^4))',
        '+ ((32(11x^(12) - 158y^2 x^(10) + 221y^4 x^8 - 68y^6 x^6 + 53y^8 x^4 + 2y^(10) x^2 + 3y^(12)) A B)/(x^2 y^2 (x^6 - 7y^2 x^4 + 7y^4 x^2 - y^6)^2))',
        '+ (((19x^(12) - 134y^2 x^(10) + 237y^4 x^8 - 84y^6 x^6 + 29y^8 x^4 - 6y^(10) x^2 + 3y^(12)) B ^2)/(x^4 y^4 (x^2 - y^2)^4))',
        '- ((2(9x^8 - 50y^2 x^6 + 98y^4 x^4 - 18y^6 x^2 + 9y^8) B w ^2)/(x^2 y^2 (x^2 - y^2)^2))',
    ]),
    ('anti', (3, 1), [
        '((6144x(7y^(11) + 37x^2 y^9 - 34x^4 y^7 + 34x^6 y^5 - 37x^8 y^3 - 7x^(10) y) A)/((x^4 - 6y^2 x^2 + y^4)^4))',
        '- ((768xy(x^2 + y^2) B)/((x^2 - y^2)^4))',
        '- ((8192x(-y^(11) - 5x^2 y^9 + 10x^4 y^7 - 30x^6 y^5 + 23x^8 y^3 + 3x^(10) y) A ^2)/((x^4 - 6y^2 x^2 + y^4)^4))',
        '+ ((64xy(x^2 - 3y^2) B w ^2)/((x^2 - y^2)^2))',
        '- ((128(3x^6 - 11y^2 x^4 + y^4 x^2 - y^6) B ^2)/(xy(x^2 - y^2)^4))',
        '+ ((512x(-y^7 - x^2 y^5 + 5x^4 y^3 + 5x^6 y) A w ^2)/((x^4 - 6y^2 x^2 + y^4)^2))',
        '- ((512(3x^(10) + 35y^2 x^8 - 74y^4 x^6 + 14y^6 x^4 - 9y^8 x^2 - y^(10)) A B)/(xy(x^6 - 7y^2 x^4 + 7y^4 x^2 - y^6)^2))',
        '- 64xy^3 w ^4',
    ]),
    ('anti', (2, 2), [
        '((768(x^2 + y^2)^2(3x^8 + 92y^2x^6 - 142y^4x^4 + 92y^6x^2 + 3y^8) A)/((x^4 - 6y^2x^2 + y^4)^4))',
        '- ((72(x^(12) - 4y^2x^(10) - y^4x^8 - 56y^6x^6 - y^8x^4 - 4y^(10)x^2 + y^(12)) B)/(x^4y^4(x^2 - y^2)^4))',
        '- ((512(x^(12) + 14y^2x^(10) + 303y^4x^8 - 956y^6x^6 + 303y^8x^4 + 14y^(10)x^2 + y^(12)) A ^2)/((x^4 - 6y^2x^2 + y^4)^4))',
        '- ((2(9x^(12) - 34y^2x^(10) + 39y^4x^8 - 1372y^6x^6 + 39y^8x^4 - 34y^(10)x^2 + 9y^(12)) B ^2)/(x^4y^4(x^2 - y^2)^4))',
        '- ((64(5x^(12) - 10y^2x^(10) + 171y^4x^8 - 1164y^6x^6 + 171y^8x^4 - 10y^(10)x^2 + 5y^(12)) A B)/(x^2y^2(x^6 - 7y^2x^4 + 7y^4x^2 - y^6)^2))',
        '+ ((4(3x^8 - 14y^2x^6 - 218y^4x^4 - 14y^6x^2 + 3y^8) B w ^2)/(x^2y^2(x^2 - y^2)^2))',
        '+ ((512(x^8 - 15x^6y^2 - 32x^4y^4 - 15x^2y^2 + y^8) A w ^2)/((x^4 - 6y^2x^2 + y^4)^2))',
        '+ 128x^2y^2 w ^4',
        '+ 64 w ^2',
    ]),
    ('anti', (1, 3), [
        '((6144(7yx^(11) + 37y^3x^9 - 34y^5x^7 + 34y^7x^5 - 37y^9x^3 - 7y^(11)x) A)/((x^4 - 6y^2x^2 + y^4)^4))',
        '- ((768xy(x^2 + y^2) B)/((x^2 - y^2)^4))',
        '+ ((8192xy(x^(10) + 5y^2x^8 - 10y^4x^6 + 30y^6x^4 - 23y^8x^2 - 3y^(10)) A ^2)/((x^4 - 6y^2x^2 + y^4)^4))',
        '+ ((128(x^6 - y^2x^4 + 11y^4x^2 - 3y^6) B ^2)/(xy(x^2 - y^2)^4))',
        '- ((512xy(x^6 + x^4y^2 - 5x^2y^4 - 5y^6) A w ^2)/((x^4 - 6y^2x^2 + y^4)^2))',
        '+ ((512(x^(10) + 9y^2x^8 - 14y^4x^6 + 74y^6x^4 - 35y^8x^2 - 3y^(10)) A B)/(xy(x^6 - 7y^2x^4 + 7y^4x^2 - y^6)^2))',
        '- ((64y(x^2 + y^2) B w ^2)/(x(x^2 - y^2)))',
        '- 64x^3y w ^4',
    ]),
    ('anti', (0, 4), [
        '((384(x^2 + y^2)^2(3x^8 + 92y^2x^6 - 142y^4x^4 + 92y^6x^2 + 3y^8) A)/((x^4 - 6y^2x^2 + y^4)^4))',
        '+ ((24(x^8 - 4y^2x^6 + 2y^4x^4 - 28y^6x^2 - 3y^8) B)/((y^3 - x^2y)^4))',
        '- ((256y^2(16x^6 - 37y^2x^4 + 10y^4x^2 - y^6) A w ^2)/((x^4 - 6y^2x^2 + y^4)^2))',
        '+ ((256(3x^(12) + 10y^2x^(10) + 77y^4x^8 - 52y^6x^6 + 205y^8x^4 - 182y^(10)x^2 + 3y^(12)) A ^2)/((x^4 - 6y^2x^2 + y^4)^4))',
        '+ ((32(3x^(12) + 2y^2x^(10) + 53y^4x^8 - 68y^6x^6 + 221y^8x^4 - 158y^(10)x^2 + 11y^(12)) A B)/(x^2y^2(x^6 - 7y^2x^4 + 7y^4x^2 - y^6)^2))',
        '+ (((3x^(12) - 6y^2x^(10) + 29y^4x^8 - 84y^6x^6 + 237y^8x^4 - 134y^(10)x^2 + 19y^(12)) B ^2)/(x^4y^4(x^2 - y^2)^4))',
        '- ((2(9x^8 - 18y^2x^6 + 98y^4x^4 - 50y^6x^2 + 9y^8) B w ^2)/(x^2y^2(x^2 - y^2)^2))',
    ]),
    ('anti', (2, 0), [
        '-((15360(17x^(18) + 1467y^2x^(16) + 7140y^4x^(14) - 4932y^6x^(12) + 318y^8x^(10) + 666y^(10)x^8) A)/((x^4 - 6y^2x^2 + y^4)^6))',
        '- ((15360(-1068y^(12)x^6 + 1260y^(14)x^4 + 249y^(16)x^2 + 3y^(18)) A)/((x^4 - 6y^2x^2 + y^4)^6))',
        '- ((120(165y^8x^(10) + 333y^(10)x^8 - 87y^(12)x^6 + 75y^(14)x^4 - 30y^(16)x^2 + 5y^(18)) B)/(x^6y^6(x^2 - y^2)^6))',
        '+ ((120(3x^(18) - 18y^2x^(16) + 45y^4x^(14) - 81y^6x^(12)) B)/(x^6y^6(x^2 - y^2)^6))',
        '- ((2048x^2(31x^(16) + 264y^2x^(14) - 7380y^4x^(12)) A ^2)/((x^4 - 6y^2x^2 + y^4)^6))',
        '- ((2048x^2(-17256y^6x^(10) + 26538y^8x^8 - 16392y^(10)x^6 + 8628y^(12)x^4 - 1560y^(14)x^2 + 303y^(16)) A ^2)/((x^4 - 6y^2x^2 + y^4)^6))',
        '- ((128(33x^(20) - 714y^2x^(18) + 7551y^4x^(16) - 17856y^6x^(14) + 21866y^8x^(12) - 19604y^(10)x^(10) + 7470y^(12)x^8) A B)/(y^2(x^3 - xy^2)^4(x^4 - 6y^2x^2 + y^4)^3))',
        '- ((128(-2160y^(14)x^6 + 453y^(16)x^4 - 114y^(18)x^2 + 3y^(20)) A B)/(y^2(x^3 - xy^2)^4(x^4 - 6y^2x^2 + y^4)^3))',
        '+ ((8(3x^(18) - 18y^2x^(16) + 354y^4x^(14)) B ^2)/(x^6y^6(x^2 - y^2)^6))',
        '+ ((8(-1281y^6x^(12) + 1242y^8x^(10) - 1551y^(10)x^8 + 282y^(12)x^6 - 87y^(14)x^4 + 39y^(16)x^2 - 7y^(18)) B ^2)/(x^6y^6(x^2 - y^2)^6))',
        '- ((8192(x^2 + y^2)^4(x^(10) + 45y^2x^8 - 46y^4x^6 + 34y^6x^4 - 3y^8x^2 + y^(10)) A ^3)/((x^4 - 6y^2x^2 + y^4)^6))',
        '+ ((2(x^2 + y^2)^4(3x^(10) - 29y^2x^8 + 70y^4x^6 - 18y^6x^4 + 7y^8x^2 - y^(10)) B ^3)/(x^6y^6(x^2 - y^2)^6))',
        '+ ((512(x^2 + y^2)^4(x^(10) - 119y^2x^8 + 162y^4x^6 - 86y^6x^4 + 13y^8x^2 - 3y^(10)) A ^2 B)/(x^2y^2(x^2 - y^2)^2(x^4 - 6y^2x^2 + y^4)^4))',
        '+ ((32(x^2 + y^2)^4(5x^(10) - 103y^2x^8 + 186y^4x^6 - 70y^6x^4 + 17y^8x^2 - 3y^(10)) A B ^2)/(x^4y^4(x^2 - y^2)^4(x^4 - 6y^2x^2 + y^4)^2))',
        '- ((256(4x^(14) + 9y^2x^(12) - 1030y^4x^(10) + 775y^6x^8 - 512y^8x^6 + 167y^(10)x^4 - 3y^(14)) A w ^2)/((x^4 - 6y^2x^2 + y^4)^4))',
        '+ ((8(13x^(12) + 16y^2x^(10) + 367y^4x^8 + 112y^6x^6 + 91y^8x^4 - 32y^(10)x^2 + 9y^(12)) B w ^2)/(x^4y^2(x^2 - y^2)^4))',
        '- ((512(x^2 + y^2)^2(13x^(10) - 315y^2x^8 + 506y^4x^6 + 354y^6x^4 - 215y^8x^2 + 9y^(10)) A ^2 w ^2)/((x^4 - 6y^2x^2 + y^4)^4))',
        '- ((2(x^2 + y^2)^2(3x^(10) - 25y^2x^8 + 26y^4x^6 - 142y^6x^4 + 51y^8x^2 - 9y^(10)) B ^2 w ^2)/(x^4y^4(x^2 - y^2)^4))',
        '- ((128(x^2 + y^2)^2(37x^8 - 25y^2x^6 + 55y^4x^4 - 7y^6x^2 + 4y^8) A B w ^2)/((x^7 - 7y^2x^5 + 7y^4x^3 - y^6x)^2))',
        '- 96 w ^4x^2',
        '- ((32(13x^(10) - 156y^2x^8 + 630y^4x^6 + 76y^6x^4 + 5y^8x^2 + 24y^(10)) A w ^4)/((x^4 - 6y^2x^2 + y^4)^2))',
        '+ ((2(9x^(10) - 99y^2x^8 + 171y^4x^6 - 212y^6x^4 - 10y^8x^2 - 19y^(10)) B w ^4)/(x^2y^2(x^2 - y^2)^2))',
        '+ 32x^2y^4 w ^6',
    ]),
    ('anti', (1, 1), [
        '- ((61440x(51y^(17) + 936x^2y^(15) + 756x^4y^(13) - 1512x^6y^(11) + 1330x^8y^9) A)/((x^4 - 6y^2x^2 + y^4)^6))',
        '- ((61440x(-1512x^(10)y^7 + 756x^(12)y^5 + 936x^(14)y^3 + 51x^(16)y) A)/((x^4 - 6y^2x^2 + y^4)^6))',
        '+ ((30720xy(3x^4 + 10y^2x^2 + 3y^4) B)/((x^2 - y^2)^6))',
        '- ((4096x(39y^(17) + 888x^2y^(15) + 3396x^4y^(13) - 18360x^6y^(11) + 36010x^8y^9 - 18360x^(10)y^7) A ^2)/((x^4 - 6y^2x^2 + y^4)^6))',
        '- ((4096x(3396x^(12)y^5 + 888x^(14)y^3 + 39x^(16)y) A ^2)/((x^4 - 6y^2x^2 + y^4)^6))',
        '+ ((16(9x^(12) + 258y^2x^(10) - 585y^4x^8 + 3196y^6x^6) B ^2)/(x^3y^3(x^2 - y^2)^6))',
        '+ ((16(-585y^8x^4 + 258y^(10)x^2 + 9y^(12)) B ^2)/(x^3y^3(x^2 - y^2)^6))',
        '- ((65536xy(x^2 - y^2)^2(x^2 + y^2)^4(x^4 + 10y^2x^2 + y^4) A ^3)/((x^4 - 6y^2x^2 + y^4)^6))',
        '+ ((256(7x^(20) + 104y^2x^(18) + 243y^4x^(16) - 3792y^6x^(14) + 18438y^8x^(12) - 33072y^(10)x^(10)) A B)/(x^3y^3(x^2 - y^2)^4(x^4 - 6y^2x^2 + y^4)^3))',
        '+ ((256(18438y^(12)x^8 - 3792y^(14)x^6 + 243y^(16)x^4 + 104y^(18)x^2 + 7y^(20)) A B)/(x^3y^3(x^2 - y^2)^4(x^4 - 6y^2x^2 + y^4)^3))',
        '- ((64(x^2 + y^2)^4(x^4 - 6y^2x^2 + y^4) B ^3)/(x^3y^3(x^2 - y^2)^6))',
        '- ((256(x^2 + y^2)^4(x^8 + 16y^2x^6 - 66y^4x^4 + 16y^6x^2 + y^8) A B ^2)/(x^3y^3(x^2 - y^2)^4(x^4 - 6y^2x^2 + y^4)^2))',
        '- ((8192(x^2 + y^2)^4(x^8 + 10y^2x^6 - 30y^4x^4 + 10y^6x^2 + y^8) A ^2 B)/(xy(x^2 - y^2)^2(x^4 - 6y^2x^2 + y^4)^4))',
        '- ((1536xy(5y^(12) + 158x^2y^(10) + 395x^4y^8 - 540x^6y^6 + 395x^8y^4 + 158x^(10)y^2 + 5x^(12)) A w ^2)/((x^4 - 6y^2x^2 + y^4)^4))',
        '+ ((48(x^(12) - 4y^2x^(10) - 17y^4x^8 - 152y^6x^6 - 17y^8x^4 - 4y^(10)x^2 + y^(12)) B w ^2)/(x^3y^3(x^2 - y^2)^4))',
        '+ ((8192xy(x^2 + y^2)^2(x^8 + 6y^2x^6 - 22y^4x^4 + 6y^6x^2 + y^8) A ^2 w ^2)/((x^4 - 6y^2x^2 + y^4)^4))',
        '+ ((64(x^2 + y^2)^2(x^4 - 14y^2x^2 + y^4) B ^2 w ^2)/(xy(x^2 - y^2)^4))',
        '- ((64xy(y^8 - 220x^2y^6 + 262x^4y^4 - 220x^6y^2 + x^8) A w ^4)/((x^4 - 6y^2x^2 + y^4)^2))',
        '+ ((512(x^2 + y^2)^2(x^8 + 8y^2x^6 - 50y^4x^4 + 8y^6x^2 + y^8) A B w ^2)/(xy(x^6 - 7y^2x^4 + 7y^4x^2 - y^6)^2))',
        '+ ((4(16x^8 - 13y^2x^6 + 442y^4x^4 - 13y^6x^2 + 16y^8) B w ^4)/(xy(x^2 - y^2)^2))',
        '- 64xy w ^4',
        '- 64x^3y^3 w ^6',
    ]),
    ('anti', (0, 2), [
        '- ((15360(3x^(18) + 249y^2x^(16) + 1260y^4x^(14) - 1068y^6x^(12) + 666y^8x^(10) + 318y^(10)x^8) A)/((x^4 - 6y^2x^2 + y^4)^6))',
        '- ((15360(-4932y^(12)x^6 + 7140y^(14)x^4 + 1467y^(16)x^2 + 17y^(18)) A)/((x^4 - 6y^2x^2 + y^4)^6))',
        '- ((120(5x^(18) - 30y^2x^(16) + 75y^4x^(14)) B)/(x^6y^6(x^2 - y^2)^6))',
        '- ((120(-87y^6x^(12) + 333y^8x^(10) + 165y^(10)x^8 + 81y^(12)x^6 - 45y^(14)x^4 + 18y^(16)x^2 - 3y^(18)) B)/(x^6y^6(x^2 - y^2)^6))',
        '- ((2048y^2(303x^(16) - 1560y^2x^(14) + 8628y^4x^(12) - 16392y^6x^(10) + 26538y^8x^8 - 17256y^(10)x^6) A ^2)/((x^4 - 6y^2x^2 + y^4)^6))',
        '- ((2048y^2(7380y^(12)x^4 + 264y^(14)x^2 + 31y^(16)) A ^2)/((x^4 - 6y^2x^2 + y^4)^6))',
        '- ((8(7x^(18) - 39y^2x^(16) + 87y^4x^(14) - 282y^6x^(12)) B ^2)/(x^6y^6(x^2 - y^2)^6))',
        '- ((8(1551y^8x^(10) - 1242y^(10)x^8 + 1281y^(12)x^6 - 354y^(14)x^4 + 18y^(16)x^2 - 3y^(18)) B ^2)/(x^6y^6(x^2 - y^2)^6))',
        '- ((128(3x^(20) - 114y^2x^(18) + 453y^4x^(16) - 2160y^6x^(14) + 7470y^8x^(12) - 19604y^(10)x^(10)) A B)/(x^2y^4(x^2 - y^2)^4(x^4 - 6y^2x^2 + y^4)^3))',
        '- ((128(21866y^(12)x^8 - 17856y^(14)x^6 + 7551y^(16)x^4 - 714y^(18)x^2 + 33y^(20)) A B)/(x^2y^4(x^2 - y^2)^4(x^4 - 6y^2x^2 + y^4)^3))',
        '- ((8192(x^2 + y^2)^4(x^(10) - 3y^2x^8 + 34y^4x^6 - 46y^6x^4 + 45y^8x^2 + y^(10)) A ^3)/((x^4 - 6y^2x^2 + y^4)^6))',
        '- ((2(x^2 + y^2)^4(x^(10) - 7y^2x^8 + 18y^4x^6 - 70y^6x^4 + 29y^8x^2 - 3y^(10)) B ^3)/(x^6y^6(x^2 - y^2)^6))',
        '- ((512(x^2 + y^2)^4(3x^(10) - 13y^2x^8 + 86y^4x^6 - 162y^6x^4 + 119y^8x^2 - y^(10)) A ^2 B)/(x^2y^2(x^2 - y^2)^2(x^4 - 6y^2x^2 + y^4)^4))',
        '- ((32(x^2 + y^2)^4(3x^(10) - 17y^2x^8 + 70y^4x^6 - 186y^6x^4 + 103y^8x^2 - 5y^(10)) A B ^2)/(x^4y^4(x^2 - y^2)^4(x^4 - 6y^2x^2 + y^4)^2))',
        '+ ((256(23x^(14) + 606y^2x^(12) - 167y^4x^(10) + 512y^6x^8 - 775y^8x^6 + 1030y^(10)x^4 - 9x^2y^(12) - 4y^(14)) A w ^2)/((x^4 - 6y^2x^2 + y^4)^4))',
        '+ ((8(9x^(12) - 32y^2x^(10) + 91y^4x^8 + 112y^6x^6 + 367y^8x^4 + 16y^(10)x^2 + 13y^(12)) B w ^2)/(x^2y^4(x^2 - y^2)^4))',
        '- ((512(x^2 + y^2)^2(9x^(10) - 215y^2x^8 + 354y^4x^6 + 506y^6x^4 - 315y^8x^2 + 13y^(10)) A ^2 w ^2)/((x^4 - 6y^2x^2 + y^4)^4))',
        '+ ((2(x^2 + y^2)^2(9x^(10) - 51y^2x^8 + 142y^4x^6 - 26y^6x^4 + 25y^8x^2 - 3y^(10)) B ^2 w ^2)/(x^4y^4(x^2 - y^2)^4))',
        '+ ((128(x^2 + y^2)^2(41x^8 - 53y^2x^6 - 133y^4x^4 - 85y^6x^2 - 4y^8) A B w ^2)/((y^7 - 7x^2y^5 + 7x^4y^3 - x^6y)^2))',
        '- ((32(24x^(10) + 5y^2x^8 + 76y^4x^6 + 630y^6x^4 - 156y^8x^2 + 13y^(10)) A w ^4)/((x^4 - 6y^2x^2 + y^4)^2))',
        '- ((2(19x^(10) + 10y^2x^8 + 212y^4x^6 - 171y^6x^4 + 99y^8x^2 - 9y^(10)) B w ^4)/(x^2(x - y)^2y^2(x + y)^2))',
        '- 96y^2 w ^4',
        '+ 32x^4y^2 w ^6',
    ]),
    ('V', (0, 0), [
        '+ ((10080(x^(24) - 8y^2x^(22) + 28y^4x^(20) - 56y^6x^(18) + 103y^8x^(16) + 832y^(10)x^(14) + 2296y^(12)x^(12)) B)/(x^8y^8(x^2 - y^2)^8))',
        '+ ((10080(832y^(14)x^(10) + 103y^(16)x^8 - 56y^(18)x^6 + 28y^(20)x^4 - 8y^(22)x^2 + y^(24)) B)/(x^8y^8(x^2 - y^2)^8))',
        '+ ((768(5x^(32) - 165y^2x^(30) + 2490y^4x^(28) - 16359y^6x^(26) + 74944y^8x^(24) - 219501y^(10)x^(22)) A B)/(x^6(x - y)^6y^6(x + y)^6(x^2 - 2yx - y^2)^4(x^2 + 2yx - y^2)^4))',
        '+ ((256(x^2 + y^2)^4(x^(16) - 31y^2x^(14) + 190y^4x^(12) - 865y^6x^(10) + 1666y^8x^8 - 865y^(10)x^6 + y^(12)) A B ^2)/(x^6y^6(x^2 - y^2)^6(x^4 - 6y^2x^2 + y^4)^2))',
        '+ ((256(190y^(12)x^4 - 31y^(14)x^2 + y^(16)) A B ^2)/(x^6y^6(x^2 - y^2)^6(x^4 - 6y^2x^2 + y^4)^2))',
        '- ((6144(x^2 + y^2)^2(47x^(16) + 4184y^2x^(14)) A w ^2)/((x^2 - 2yx - y^2)^6(x^2 + 2yx - y^2)^6))',
        '- ((6144(17892y^4x^(12) - 37016y^6x^(10) + 41818y^8x^8 - 37016y^(10)x^6 + 17892y^(12)x^4) A w ^2)/((x^2 - 2yx - y^2)^6(x^2 + 2yx - y^2)^6))',
        '- ((6144(4184y^(14)x^2 + 47y^(16)) A w ^2)/((x^2 - 2yx - y^2)^6(x^2 + 2yx - y^2)^6))',
        '- ((48(x^2 + y^2)^2(15x^(16) - 121y^2x^(14) + 458y^4x^(12)) B w ^2)/(x^6(x - y)^6y^6(x + y)^6))',
        '+ ((768(584486y^(12)x^(20) - 1582599y^(14)x^(18) + 2641078y^(16)x^(16) - 1582599y^(18)x^(14)) A B)/(x^6(x-y)^6y^6(x+y)^6(x^2-2yx-y^2)^4(x^2+2yx-y^2)^4))',
        '+ ((768(2490x^4y^(28) - 16359x^6y^(26) + 74944x^8y^(24) - 219501x^(10)y^(22) + 584486x^(12)y^(20)) A B)/(x^6(x-y)^6y^6(x+y)^6(x^2-2yx-y^2)^4(x^2+2yx-y^2)^4))',
        '+ ((768(5y^(32) - 165x^2y^(30)) A B)/(x^6(x-y)^6y^6(x+y)^6(x^2-2yx-y^2)^4(x^2+2yx-y^2)^4))',
        '- ((65536(x^2+y^2)^4(x^8-76y^2x^6+166y^4x^4-76y^6x^2+y^8) A ^3)/((x^4-6y^2x^2+y^4)^6))',
        '+ ((24576(61x^(16)+1608y^2x^(14)+11372y^4x^(12)-27400y^6x^(10)+44334y^8x^8-27400y^(10)x^6) A ^2)/((x^4-6y^2x^2+y^4)^6))',
        '+ ((24576(11372y^(12)x^4+1608y^(14)x^2+61y^(16)) A ^2)/((x^4-6y^2x^2+y^4)^6))',
        '+ ((12(87x^(24)-676y^2x^(22)+2246y^4x^(20)) B ^2)/(x^8y^8(x^2-y^2)^8))',
        '+ ((12(-6932y^6x^(18)+24281y^8x^(16)+37304y^(10)x^(14)+243732y^(12)x^(12)+37304y^(14)x^(10)) B ^2)/(x^8y^8(x^2-y^2)^8))',
        '+ ((12(+24281y^(16)x^8-6932y^(18)x^6+2246y^(20)x^4-676y^(22)x^2+87y^(24)) B ^2)/(x^8y^8(x^2-y^2)^8))',
        '+ ((16(x^2+y^2)^4(x^(16)-11y^2x^(14)+70y^4x^(12)-245y^6x^(10)+626y^8x^8-245y^(10)x^6+70y^(12)x^4) B ^3)/(x^8y^8(x^2-y^2)^8))',
        '+ ((16(-11y^(14)x^2+y^(16)) B ^3)/(x^8y^8(x^2-y^2)^8))',
        '- ((12288(x^2+y^2)^4(7x^8-52y^2x^6+202y^4x^4-52y^6x^2+7y^8) A ^2 B)/(x^2y^2(x^2-y^2)^2(x^4-6y^2x^2+y^4)^4))',
        '+ ((65536(x^2+y^2)^8 A ^4)/((x^4-6y^2x^2+y^4)^6))',
        '+ ((16384(x^2+y^2)^8 A ^3 B)/(x^2y^2(x^2-y^2)^2(x^4-6y^2x^2+y^4)^4))',
        '- ((48(-999y^6x^(10)+5134y^8x^8-999y^(10)x^6+458y^(12)x^4-121y^(14)x^2+15y^(16)) B w ^2)/(x^6(x-y)^6y^6(x+y)^6))',
        '+ ((1536(x^2+y^2)^8 A ^2 B ^2)/(x^4y^4(x^2-y^2)^4(x^4-6y^2x^2+y^4)^2))',
        '+ ((147456x^2(x-y)^2y^2(x+y)^2 A w ^4)/((x^2-2yx-y^2)^2(x^2+2yx-y^2)^2))',
        '+ ((64(x^2+y^2)^8 A B ^3)/(x^6y^6(x^2-y^2)^6))',
        '+ ((512(x^2+y^2)^2(39x^8+92y^2x^6+362y^4x^4+92y^6x^2+39y^8) A B w ^2)/(x^2y^2(x^6-7y^2x^4+7y^4x^2-y^6)^2))',
        '+ (((x^2+y^2)^8(x^4-6y^2x^2+y^4)^2 B ^4)/(x^8y^8(x^2-y^2)^8))',
        '- ((16(x^2+y^2)^2(3x^(16)-23y^2x^(14)+54y^4x^(12)) B ^2 w ^2)/(x^6(x-y)^6y^6(x+y)^6))',
        '- ((16(-41y^6x^(10)+782y^8x^8-41y^(10)x^6+54y^(12)x^4-23y^(14)x^2+3y^(16)) B ^2 w ^2)/(x^6(x-y)^6y^6(x+y)^6))',
        '- ((4096(x^2+y^2)^2(x^(16)+568y^2x^(14)+124y^4x^(12)+3592y^6x^(10)-8314y^8x^8) A ^2 w ^2)/((x^2-2yx-y^2)^6(x^2+2yx-y^2)^6))',
        '- ((4096(x^2+y^2)^2(3592y^(10)x^6+124y^(12)x^4+568y^(14)x^2+y^(16)) A ^2 w ^2)/((x^2-2yx-y^2)^6(x^2+2yx-y^2)^6))',
        '+ ((432(x^8-2y^2x^6+18y^4x^4-2y^6x^2+y^8) B w ^4)/(x^2(x-y)^2y^2(x+y)^2))',
        '- ((2304(x^2+y^2)^6 A B ^2 w ^2)/(x^2y^2(x^6-7y^2x^4+7y^4x^2-y^6)^2))',
        '+ ((3072 (x^2 + y^2)^6 (3x^8 - 58y^2x^6 + 158y^4x^4 - 58y^6x^2 + 3y^8) A ^2 B w ^2)/(x^2 y^2 (x^2 - y^2)^2 (x^4 - 6y^2x^2 + y^4)^4))',
        '+ ((32768 (x^2 + y^2)^6 (3x^8 - 52y^2x^6 + 146y^4x^4 - 52y^6x^2 + 3y^8) A ^3 w ^2)/((x^4 - 6y^2x^2 + y^4)^6))',
        '- ((4 (x^2 + y^2)^6 (3x^8 - 34y^2x^6 + 110y^4x^4 - 34y^6x^2 + 3y^8) B ^3 w ^2)/(x^6 y^6 (x^2 - y^2)^6))',
        '+ ((8192 x^2 y^2 (x^2 - y^2)^2 (45x^8 - 284y^2x^6 + 1198y^4x^4 - 284y^6x^2 + 45y^8) A ^2 w ^4)/((x^4 - 6y^2x^2 + y^4)^4))',
        '+ ((38 (x^(16) + 2y^2x^(14) - 18y^4x^(12) + 198y^6x^(10) - 110y^8x^8 + 198y^(10)x^6 - 18y^(12)x^4 + 2y^(14)x^2 + y^(16)) B ^2 w ^4)/(x^4 y^4 (x^2 - y^2)^4))',
        '- ((4 (x^2 + y^2)^2 (3x^8 - 34y^2x^6 + 110y^4x^4 - 34y^6x^2 + 3y^8) B w ^6)/(x^2 y^2 (x^2 - y^2)^2))',
        '+ ((512 (3x^(16) - 42y^2x^(14) + 686y^4x^(12) - 2702y^6x^(10) + 4878y^8x^8 - 2702y^(10)x^6 + 686y^(12)x^4) A B w ^2)/(x^2 y^2 (x^6 - 7y^2x^4 + 7y^4x^2 - y^6)^2))',
        '+ ((512 (-42y^(14)x^2 + 3y^(16)) A B w ^2)/(x^2 y^2 (x^6 - 7y^2x^4 + 7y^4x^2 - y^6)^2))',
        '+ ((128 (x^2 + y^2)^2 (3x^8 - 52y^2x^6 + 146y^4x^4 - 52y^6x^2 + 3y^8) A w ^6)/((x^4 - 6y^2x^2 + y^4)^2))',
        '+ 128 x^2 y^2 w ^6',
    ]),
]
