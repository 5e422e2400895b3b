"""Transcribed coefficient tables for the algebraic integrals y_2 .. y_8.

Each table maps a derivative order ``(m, n)`` (for dt^m du^n) to the
coefficient polynomial in t, u, a, b, w (w = omega), written as text and
parsed once with sympy.  Square brackets are plain grouping.  Tables hold
the operators at their printed normalization: y_2/4, y_4/16, y_6, y_8.

The tables are kept as printed.  ``Y4_ERRATA`` and ``Y8_ERRATA`` list the
places where the printed text could not be used as is, each with the
replacement certified by exact commutation with h_k.  ``y4_rows`` and
``y8_rows`` return the corrected tables.
"""

from fractions import Fraction

Y2_OVER_4 = [
    ((2, 0), "(t - u)"),
    ((1, 0), "[w(u - t) + a + 1/2]"),
]

Y4_OVER_16 = [
    ((4, 0), "(t^2 - u)"),
    ((2, 2), "-8(t^2 - u)u"),
    ((0, 4), "16(t^2 - u)u^2"),
    ((3, 0), "-2[w t^2 - (2a + 1)t - w u]"),
    ((2, 1), "-4[(2b + 1)t^2 - 2(a + b + 1)u]"),
    ((1, 2), "8u[w t^2 - (2a + 1)t - w u]"),
    ((0, 3), "16u[(2b + 3)t^2 - 2(a + b + 2)u]"),
    ((2, 0), "16[w^2 t^2 - 3(2a + 1)w t - w^2 u + (2a + 1)(2a + 2b + 1)]"),
    ((1, 1), "-4[(2b + 1)w t^2 - (2a + 1)(2b + 1)t - 2(a + b + 1)w u]"),
    ((0, 2), "4[(2b + 1)(2b + 3)t^2 + (2a + 1)w t u - 2(2a^2 + 6a b + 2b^2 + 8a + 7b + 5)u]"),
    ((1, 0), "w(2a + 1)(w t - 2a - 2b - 1)"),
    ((0, 1), "2(2a + 1)(2b + 1)(w t - 2a - 2b - 1)"),
]

Y6 = [
    ((6, 0), "64(t^3 - u)"),
    ((4, 2), "-3456(t^3 - u)t u"),
    ((3, 3), "-6912(t^3 - u)u^2"),
    ((2, 4), "46656(t^3 - u)t^2 u^2"),
    ((1, 5), "186624(t^3 - u)t u^3"),
    ((0, 6), "186624(t^3 - u)u^4"),
    ((5, 0), "-96[2w t^3 - 3(2a + 1)t^2 - 2w u]"),
    ((4, 1), "-1728[(2b + 1)t^3 - 2(a + b + 1)u]t"),
    ((3, 2), "1728[4w t^4 - (12a + 6b + 19)t^3 - 4w t u + 2(3a + 3b + 8)u]u"),
    ((2, 3), "5184[9(2b + 3)t^5 + 2w t^3 u - 3(8a + 6b + 13)t^2 u - 2w u^2]u"),
    ((1, 4), "-23328[2w t^4 - (6a + 20b + 57)t^3 - 2w t u + 4(5a + 5b + 16)u]t u^2"),
    ((0, 5), "-46656[2w t^4 - (6a + 12b + 47)t^3 - 2w t u + 2(6a + 6b + 25)u]u^3"),
    ((4, 0), "48[4w^2 t^3 - 15(2a + 1)w t^2 + 6(2a + 1)(3a + 3b + 2)t - 4w^2 u]"),
    ((3, 1), "864[4(2b + 1)w t^4 - (2b + 1)(12a + 2b + 13)t^3 - 8(a + b + 1)w t u"
             " + 2(4a^2 + 3(2b + 3)a + 2b^2 + 11b + 7)u]"),
    ((2, 2), "432[27(2b + 3)(2b + 1)t^5 - 8w^2 t^4 u + 6(12a + 6b + 19)w t^3 u"
             " - 9(16a^2 + 16(3b + 5)a + 12b^2 + 48b + 45)t^2 u + 8w^2 t u^2 - 12(3a + 3b + 8)w u^2]"),
    ((1, 3), "-7776[6(2b + 3)w t^4 - 3(2b + 3)(6a + 8b + 27)t^3 - 2(8a + 6b + 13)w t u"
             " + 2(24a^2 + 2(30b + 71)a + 24b^2 + 138b + 173)u]t u"),
    ((0, 4), "3888[4w^2 t^5 - 3(6a + 20b + 57)w t^4 + 6(4a^2 + (30b + 83)a + 26b^2 + 179b + 288)t^3"
             " - 4w^2 t^2 u + 12(5a + 5b + 16)w t u - 12(13a^2 + (30b + 97)a + 13b^2 + 97b + 169)u]u^2"),
    ((3, 0), "-[64w^3 t^3 - 576(2a + 1)w^2 t^2 + 576(6a^2 + 6b a + 7a + 3b + 2)w t - 64w^3 u"
             " - 96(2a + 1)(3a + 3b + 2)(3a + 3b + 1)]"),
    ((2, 1), "-[1728(2b + 1)w^2 t^4 - 1296(2b + 1)(12a + 2b + 13)w t^3 + 7776(2a + 1)(2b + 1)(2a + 2b + 3)t^2"
             " - 3456(a + b + 1)w^2 t u + 2592(4a^2 + 3(2b + 3)a + 2b^2 + 11b + 7)w u]"),
    ((1, 2), "-[11664(2b + 3)(2b + 1)w t^5 - 5832(6a + 4b + 17)(2b + 3)(2b + 1)t^4 + 1728(6a + 5)w^2 t^3 u"
             " - 3888(16a^2 + 16(3b + 5)a + 12b^2 + 48b + 45)w t^2 u + 2592[36a^3 + 6(36b + 53)a^2"
             " + (216b^2 + 792b + 685)a + 36b^3 + 306b^2 + 621b + 362]t u - 3456w^2 u^2]"),
    ((0, 3), "[15552(2b + 3)w^2 t^5 u - 11664(2b + 3)(6a + 8b + 27)w t^4 u + 432(648b^3 + 5724b^2 + 15282b"
             " + 216a^2(2b + 3) + 108a(12b^2 + 56b + 57) + 12231)t^3 u - 1728w^3 t^3 u^2 - 31104(a + b + 2)w^2 t^2 u^2"
             " + 7776(24a^2 + 2(30b + 71)a + 24b^2 + 138b + 173)w t u^2 - 864(324a^3 + 108(13b + 30)a^2"
             " + 6(234b^2 + 1242b + 1597)a + 324b^3 + 3240b^2 + 9558b + 8679)u^2 + 1728w^3 u^3]"),
    ((2, 0), "-[144(2a + 1)w^3 t^2 - 8(247a^2 + 216b a + 293a + 27b^2 + 81b + 80)w^2 t"
             " + 144(2a + 1)(3a + 3b + 2)(3a + 3b + 1)w]"),
    ((1, 1), "-[864(6a + 5)(2b + 1)w^2 t^3 - 7776(2a + 1)(2b + 1)(2a + 2b + 3)w t^2 + 2592(2a + 1)(2b + 1)"
             "(3a + 3b + 2)(3a + 3b + 5)t - 48(31a^2 + 41a + 27b^2 + 45b + 44)w^2 u]"),
    ((0, 2), "[3888(2b + 3)(2b + 1)w^2 t^5 - 2916(2b + 3)(2b + 1)(6a + 4b + 17)w t^4"
             " + 5832(2b + 3)(2b + 1)(a + b + 4)(4a + 2b + 7)t^3 - 1296(2b + 3)w^3 t^3 u"
             " - 72(185a^2 + (648b + 1003)a + 189b^2 + 783b + 622)w^2 t^2 u + 1296(36a^3 + 6(36b + 53)a^2"
             " + (216b^2 + 792b + 685)a + 36b^3 + 306b^2 + 621b + 362)w t u + 2592(a + b + 2)w^3 u^2"
             " - 1296(36a^4 + 324a^3 b + 450a^3 + 576b^2 a^2 + 1962a^2 b + 1619a^2 + 324b^3 a + 1962a b^2 + 3678a b"
             " + 2213a + 36b^4 + 450b^3 + 1611b^2 + 2181b + 992)u]"),
    ((1, 0), "-(31a^2 + 27b^2 + 41a - 27b + 8)[8w t - 8(3a + 3b + 1)]w^2"),
    ((0, 1), "-12[18(2b + 3)(2b + 1)w^3 t^3 + 3(2b + 1)(185a^2 - 27b^2 + 216a b + 135b + 355a + 136)w^2 t^2"
             " - 108(2b + 1)(2a + 1)(3a + 3b + 5)(3a + 3b + 2)w t"
             " - 2(41a^2 + 108b a + 9b^2 + 121a + 153b + 82)w^3 u"
             " + 108(2a + 1)(2b + 1)(a + b + 2)(3a + 3b + 1)(3a + 3b + 2)]"),
]

# y_8 as printed.  Entries whose printed text is unusable (lost at a page
# break, or with an unbalanced bracket) carry the readable part only and are
# completed from ERRATA.
Y8_PRINTED = [
    ((8, 0), "256(t^4 - u)"),
    ((6, 2), "-49152(t^4 - u)t^2 u"),
    ((5, 3), "-262144(t^4 - u)t u^2"),
    ((4, 4), "131072(19t^8 - 23t^4 u + 4u^2)u^2"),
    ((3, 5), "25165824(t^4 - u)t^3 u^3"),
    ((2, 6), "-4194304(3t^8 - 31t^4 u + 28u^2)t^2 u^3"),
    ((1, 7), "-67108864(t^8 - 5t^4 u + 4u^2)t u^4"),
    ((0, 8), "16777216(t^4 - 4u)^2(t^4 - u)u^4"),
    ((7, 0), "-1024[w t^4 - 2(2a + 1)t^3 - w u]"),
    ((6, 1), "-24576[(2b + 1)t^4 - 2(a + b + 1)u]t^2"),
    ((5, 2), "49152[3w t^5 - 4(3a + 2b + 6)t^4 - 3w t u + 2(4a + 4b + 11)u]t u"),
    ((4, 3), "131072[19(2b + 3)t^8 + 5w t^5 u - (58a + 46b + 111)t^4 u - 5w t u^2 + (8a + 8b + 29)u^2]u"),
    ((3, 4), "-262144[19w t^8 - 2(38a + 120b + 357)t^7 - 23w t^4 u + 4(64a + 60b + 201)t^3 u + 4w u^2]u^2"),
    ((2, 5), "-6291456[3(2b + 5)t^8 + 6w t^5 u - 2(15a + 31b + 122)t^4 u - 6w t u^2"
             " + 2(28a + 28b + 121)u^2]t^2 u^2"),
    ((1, 6), "-4194304[-3w t^9 + 4(3a + 14b + 55)t^8 + 31w t^5 u - 2(84a + 140b + 681)t^4 u - 28w t u^2"
             " + 56(4a + 4b + 21)u^2]t u^3"),
    ((0, 7), "33554432[(2b + 7)t^12 + w t^9 u - 3(2a + 6b + 29)t^8 u - 5w t^5 u^2 + (32a + 48b + 273)t^4 u^2"
             " + 4w t u^3 - 4(8a + 8b + 49)u^3]u^3"),
    ((6, 0), "512[3w^2 t^4 - 14(2a + 1)w t^3 + 6(2a + 1)(4a + 4b + 3)t^2 - 3w^2 u]"),
    ((5, 1), "8192[9(2b + 1)w t^5 - 4(2b + 1)(9a + 2b + 12)t^4 - 18(a + b + 1)w t u"
             " + 4(8a^2 + (12b + 19)a + 4b^2 + 23b + 15)u]t"),
    ((4, 2), "8192[76(2b + 1)(2b + 3)t^8 - 18w^2 t^6 u + 60(3a + 2b + 6)w t^5 u"
             " - (448a^2 + 4(348b + 635)a + 3(128b^2 + 576b + 631))t^4 u + 18w^2 t^2 u^2"
             " - 30(4a + 4b + 11)w t u^2 + (112a^2 + 8(24b + 61)a + 80b^2 + 520b + 723)u^2]"),
    ((3, 3), "-131072[38(2b + 3)w t^8 - 4(2b + 3)(38a + 48b + 177)t^7 + 3w^2 t^5 u - 2(58a + 46b + 111)w t^4 u"
             " + 8(52a^2 + 2(64b + 163)a + 48b^2 + 294b + 387)t^3 u - 3w^2 t u^2 + 2(8a + 8b + 29)w u^2]u"),
    ((2, 4), "-131072[72(4b^2 + 16b + 15)t^8 - 27w^2 t^6 u + 6(38a + 120b + 357)w t^5 u"
             " - 4(124a^2 + 25(36b + 101)a + 800b^2 + 5590b + 9156)t^4 u + 27w^2 t^2 u^2"
             " - 12(64a + 60b + 201)w t u^2 + 2(1456a^2 + 32(105b + 358)a + 1456b^2 + 11384b + 20673)u^2]t^2 u"),
    ((1, 5), "2097152[9(2b + 5)w t^9 - 36(2b + 5)(a + 2b + 9)t^8 + 9w^2 t^6 u - 6(15a + 31b + 122)w t^5 u"
             " - 2(304a^2 + 8(84b + 361)a + 304b^2 + 2888b + 6609)u^2]t u^2"),
    ((0, 6), "2097152[12(2b + 7)(2b + 5)t^12 + 4(3a + 14b + 55)w t^9 u - (32a^2 + 4(84b + 313)a + 448b^2"
             " + 3920b + 8313w)u t^8 + 12w^2 t^6 u^2 - 2(84a + 140b + 681)w t^5 u^2 + (496a^2 + 8(224b + 1051)a"
             " + 1232b^2 + 12712b + 32223)u^2 t^4 - 12w^2 t^2 u^3 + 56(4a + 4b + 21)w t u^3"
             " - 4(208a^2 + 8(56b + 289)a + 208b^2 + 2312b + 6321)u^3]u^2"),
    ((5, 0), "1024[-w^3 t^4 + 9(2a + 1)w^2 t^3 - 9(2a + 1)(4a + 4b + 3)w t^2 + 4(2a + 1)(8a^2 + 2(8b + 5)a"
             " + 8b^2 + 10b + 3)t + w^3 u]"),
    ((4, 1), "4096[-18(2b + 1)w^2 t^6 + 20(2b + 1)(9a + 2(b + 6))w t^5 - (2b + 1)(448a^2 + 4(116b + 287)a"
             " + 16b^2 + 320b + 609)t^4 + 36(a + b + 1)w^2 t^2 u - 20(8a^2 + (12b + 19)a + 4b^2 + 23b + 15)w t u"
             " + 2(48a^3 + 16(7b + 11)a^2 + (80b^2 + 312b + 247)a + 16b^3 + 136b^2 + 319b + 159)u]"),
    ((3, 2), "-16384[76(2b + 1)(2b + 3)w t^8 - 8(38a + 24b + 117)(2b + 1)(2b + 3)t^7 - 3w^3 t^6 u"
             " + 18(4a + 2b + 7)w^2 t^5 u - (448a^2 + 4(348b + 635)a + 3(128b^2 + 576b + 631))w t^4 u"
             " + 2(416a^3 + 16(156b + 251)a^2 + 2(1232b^2 + 5056b + 4813)a + 384b^3 + 3568b^2 + 7856b + 5037)t^3 u"
             " + 3w^3 t^2 u^2 - 36(a + b + 3)w^2 t u^2 + (112a^2 + 8(24b + 61)a + 80b^2 + 520b + 723)w u^2]"),
    ((2, 3), "-65536[24(2b + 5)(2b + 3)(2b + 1)t^10 - 54(2b + 3)w^2 t^8 u + 12(2b + 3)(38a + 48b + 177)w t^7 u"
             " - 8(2b + 3)(124a^2 + 5(72b + 235)a + 4(45b^2 + 346b + 629))t^6 u + w^3 t^5 u^2"
             " + 9(16a + 12b + 27)w^2 t^4 u^2 - 24(52a^2 + 2(64b + 163)a + 48b^2 + 294b + 387)w t^3 u^2"
             " + 4(672a^3 + 8(364b + 901)a^2 + 4(728b^2 + 4160b + 5701)a + 672b^3 + 7136b^2 + 22378b + 21351)t^2 u^2"
             " - w^3 t u^3 - 9w^2 u^3]"),
    ((1, 4), "262144[36(2b + 5)(2b + 3)w t^10 - 16(9a + 10b + 53)(2b + 5)(2b + 3)t^9 - 4w^3 t^8 u"
             " + 9(6a + 20b + 59)w^2 t^7 u - 2(124a^2 + 25(36b + 101)a + 800b^2 + 5590b + 9156)w t^6 u"
             " + 4(96a^3 + 4(280b + 757)a^2 + (2176b^2 + 14524b + 22919)a + 960b^3 + 11152b^2 + 41048b + 47997)t^5 u"
             " + 2w^3 t^4 u^2 - 18(10a + 10b + 33)w^2 t^3 u^2 + (1456a^2 + 32(105b + 358)a + 1456b^2 + 11384b"
             " + 20673)w t^2 u^2 - 2[1600a^3 + 16(380b + 1271)a^2 + (6080b^2 + 44960b + 81732)a + 1600b^3"
             " + 20336b^2 + 81684b + 104727]t u^2 + 2w^3 u^3]u"),
    ((0, 5), "1048576[8(2b + 3)(2b + 5)(2b + 7)t^12 + 36(2b + 5)(a + 2b + 9)u w t^9 - 3(2b + 5)(32a^2"
             " + 4(36b + 145)a + 112b^2 + 1040b + 2349)t^8 u - 3w^3 t^7 u^2 + 9(4a + 8b + 33)w^2 t^6 u^2"
             " - 2(112a^2 + 2(252b + 961)a + 376b^2 + 3290b + 6939)w t^5 u^2 + 2[208a^3 + 496(3b + 11)a^2"
             " + (2416b^2 + 20120b + 40965)a + 3(336b^3 + 4648b^2 + 20939b + 30720)]t^4 u^2 + 3w^3 t^3 u^3"
             " - 9(8a + 8b + 35)w^2 t^2 u^3 + 2(304a^2 + 8(84b + 361)a + 304b^2 + 2888b + 6609)w t u^3"
             " - 2[704a^3 + 16(156b + 655)a^2 + 12(208b^2 + 1880b + 4241)a + 704b^3 + 10480b^2 + 50892b"
             " + 80847]u^3]"),
    ((4, 0), "[256w^4 t^4 - 256w^4 u - 5120(2a + 1)w^3 t^3 + 128(664a^2 + 64a(9b + 11) - b^2 + 289b + 227)w^2 t^2"
             " - 10240(2a + 1)(8a^2 + 2a(8b + 5) + 8b^2 + 10b + 3)w t + 1024(2a + 1)(32a^3 + 48a^2(2b + 1)"
             " + 2a(48b^2 + 48b + 11) + 32b^3 + 48b^2 + 22b + 3)]"),
    ((3, 1), "-2048[-12(2b + 1)w^3 t^6 + 24(2b + 1)(12a + 2b + 15)w^2 t^5 - 4(2b + 1)(448a^2 + 4a(116b + 287)"
             " + 16b^2 + 320b + 609)w t^4 + 8(2a + 1)(2b + 1)(208a^2 + 16a(26b + 41) + 208b^2 + 656b + 501)t^3"
             " + 24(a + b + 1)w^3 t^2 u - (280a^2 + 8(36b + 55)a + 95b^2 + 625b + 407)w^2 t u"
             " + 8(48a^3 + 16a^2(7b + 11) + a(80b^2 + 312b + 247) + 16b^3 + 136b^2 + 319b + 159)w u]"),
    ((2, 2), "4096[216(2b + 1)(2b + 3)w^2 t^8 - 48(38a + 24b + 117)(2b + 1)(2b + 3)w t^7 + 32(2b + 1)(2b + 3)"
             "(124a^2 + 5a(36b + 145) + 56b^2 + 478b + 1026)t^6 + 12(6a - 2b + 3)w^3 t^5 u - (1064a^2"
             " + 8a(432b + 785) + 865b^2 + 3671b + 3931)w^2 t^4 u + 12(416a^3 + 16a^2(156b + 251)"
             " + 2a(1232b^2 + 5056b + 4813) + 384b^3 + 3568b^2 + 7856b + 5037)w t^3 u - 4(1792a^4"
             " + 32a^3(504b + 761) + 16a^2(1792b^2 + 6836b + 6163) + 2a(8064b^3 + 54544b^2 + 113888b + 75225)"
             " + 1792b^4 + 24064b^3 + 95776b^2 + 142320b + 70173)t^2 u + 12(2a + 2b + 1)w^3 t u^2"
             " + 2(88a^2 + 20a - b^2 + 109b + 254)w^2 u^2]"),
    ((1, 3), "-32768[-48(2b + 5)(2b + 3)(2b + 1)w t^10 + 64(3a + 2b + 13)(2b + 5)(2b + 3)(2b + 1)t^9"
             " + 32(2b + 3)w^3 t^8 u - 72(2b + 3)(6a + 8b + 29)w^2 t^7 u + 16(2b + 3)[124a^2 + 5(72b + 235)a"
             " + 4(45b^2 + 346b + 629)]w t^6 u - 2(4608b^4 + 61568b^3 + 288064b^2 + 557184b + w^4 u"
             " + 1536a^3(2b + 3) + 64a^2(224b^2 + 1010b + 1011) + 16a(992b^3 + 8480b^2 + 22186b + 17547)"
             " + 372096)t^5 u - 2(28a + 16b + 21)w^3 t^4 u^2 + [1064a^2 + 8(360b + 911)a + 1153b^2 + 6911b"
             " + 8953]w^2 t^3 u^2 - 8(672a^3 + 8(364b + 901)a^2 + 4(728b^2 + 4160b + 5701)a + 672b^3 + 7136b^2"
             " + 22378b + 21351)w t^2 u^2 + 2[4096a^4 + 256a^3(100b + 239) + 256a^2(168b^2 + 913b + 1227)"
             " + 32a(800b^3 + 7304b^2 + 21682b + 20973) + 4096b^4 + u w^4 + 61184b^3 + 313728b^2 + 669264b"
             " + 506232]t u^2 - 2(16a + 16b + 49)w^3 u^3]"),
    ((0, 4), "32768[32(16b^4 + 128b^3 + 344b^2 + 352b + 105)t^12 + 64(9a + 10b + 53)(4b^2 + 16b + 15)w t^9 u"
             " + 8w^4 t^8 u^2 - 8(960b^4 + 13440b^3 + 65784b^2 + 131136b + 192a^2(4b^2 + 16b + 15)"
             " + 24a(80b^3 + 676b^2 + 1724b + 1335) + 89190)t^8 u - 8(8a + 30b + 87)w^3 t^7 u^2"
             " + [472a^2 + 80(36b + 103)a + 2495b^2 + 18385b + 31043]w^2 t^6 u^2 - 16[96a^3 + 4a^2(280b + 757)"
             " + a(2176b^2 + 14524b + 22919) + 960b^3 + 11152b^2 + 41048b + 47997]w t^5 u^2 - 10w^4 t^4 u^3"
             " + 2(1024a^4 + 128a^3(130b + 339) + 16a^2(3216b^2 + 20344b + 30887) + 8a(6240b^3 + 67568b^2"
             " + 236602b + 266769) + 14080b^4 + 227200b^3 + 1332928b^2 + 3363192b + 3077145)t^4 u^2"
             " + 16(13a + 15b + 48)w^3 t^3 u^3 - 48(52a^2 + (120b + 413)a + 52b^2 + 413b + 756)w^2 t^2 u^3"
             " + 8a^2(1600a^3 + 16(380b + 1271) + a(6080b^2 + 44960b + 81732) + 1600b^3 + 20336b^2 + 81684b"
             " + 104727)w t u^3 + 2w^4 u^4 - 2(10496a^4 + 256a^3(220b + 713) + 32a^2(2864b^2 + 20216b + 35941)"
             " + 16a[3520b^3 + 40432b^2 + 154588b + 196185] + 10496b^4 + 182528b^3 + 1150112b^2 + 3138864b"
             " + 3138489)u^3]"),
    ((3, 0), "[1024(2a + 1)w^4 t^3 - 256(184a^2 + 8a(12b + 13) - b^2 + 49b + 47)w^3 t^2 + 512(368a^3"
             " + 56a^2(10b + 7) + 2a(95b^2 + 201b + 99) - 2b^3 + 97b^2 + 143b + 47)w^2 t - 2048(2a + 1)"
             "(32a^3 + 48a^2(2b + 1) + a(96b^2 + 96b + 22) + 32b^3 + 48b^2 + 22b + 3)w]"),
    ((2, 1), "-1024[-8(18a - 2b + 15)(2b + 1)w^3 t^5 + 2(2b + 1)[1064a^2 + 8a(144b + 353) + b^2 + 647b"
             " + 1339]w^2 t^4 - 24(2a + 1)(2b + 1)(208a^2 + 16a(26b + 41) + 208b^2 + 656b + 501)w t^3"
             " + 8(2a + 1)(2b + 1)[896a^3 + 16a^2(168b + 229) + 16a(168b^2 + 458b + 291) + 896b^3 + 3664b^2"
             " + 4656b + 1809]t^2 + (200a^2 - 8a(12b + 25) - 7(5b^2 - 5b - 3))w^3 t u - (704a^3"
             " + 8a^2(88b + 105) - 8a(b^2 - 21b - 7) - 8b^3 + 285b^2 + 1323b + 661)w^2 u]"),
    ((1, 2), "4096[-64(2b + 1)(2b + 3)w^3 t^8 + 144(6a + 4b + 19)(2b + 1)(2b + 3)w^2 t^7 - 32(4b^2 + 8b + 3)"
             "(124a^2 + 5a(36b + 145) + 56b^2 + 478b + 1026)w t^6 + 4(2b + 3)[1024b^4 + 12544b^3 + 52096b^2"
             " + 81504b + 3w^4 u + 1536a^3(2b + 1) + 64a^2(112b^2 + 450b + 197) + 16a(320b^3 + 2488b^2"
             " + 5402b + 2119) + 29232]t^5 + (168a^2 + 48a(14b + 25) + 97b^2 + 215b + 145)w^3 t^4 u"
             " - 4(488a^3 + 8a^2(399b + 640) + a(3457b^2 + 14087b + 13335) + 579b^3 + 5186b^2 + 11158b"
             " + 6992)w^2 t^3 u + 4(1792a^4 + 32a^3(504b + 761) + 16a^2(1792b^2 + 6836b + 6163) + 2a(8064b^3"
             " + 54544b^2 + 113888b + 75225) + 1792b^4 + 24064b^3 + 95776b^2 + 142320b + 70173)u w t^2"
             " - 8u(1024a^5 + 768(16b + 23)a^4 + 128(248b^2 + 886b + 765)a^3 + 128(248b^3 + 1496b^2 + 2945b"
             " + 1891)a^2 + (12288b^4 + 113408b^3 + 376768b^2 + 532416b + 3w^4 u + 271632)a + 1024b^5"
             " + 17664b^4 + 3b w^4 u + 6w^4 u + 97728b^3 + 240560b^2 + 268272b + 109332)t"
             " + 2(24a^2 + 12(16b + 39)a + 81b^2 + 411b + 469)w^3 u^2]"),
    ((0, 3), "-16384[-64(3a + 2b + 13)(8b^3 + 36b^2 + 46b + 15)w t^9 + 16(2b + 3)(64b^4 + 896b^3 + 4196b^2"
             " + 6892b - w^4 u + 32a^2(4b^2 + 12b + 5) + 4a(48b^3 + 388b^2 + 792b + 305) + 2505)t^8"
             " + 32(2b + 3)(4a + 6b + 21)w^3 t^7 u - 2(2b + 3)(472a^2 + 16a(72b + 245) + 575b^2 + 4705b"
             " + 8843)w^2 t^6 u + 32(2b + 3)[96a^3 + 4a^2(112b + 337) + a(496b^2 + 3496b + 5849) + 4(36b^3"
             " + 427b^2 + 1610b + 1938)]w t^5 u - 2u[6144b^5 + 104960b^4 + 686912b^3 + 2143328b^2"
             " - 4(5w^4 u - 793449)b - 39w^4 u + 2048a^4(2b + 3) + 1024a^3(26b^2 + 111b + 108)"
             " + 32a^2(1472b^3 + 11648b^2 + 28814b + 21981) + 4a(7680b^4 + 92544b^3 + 401504b^2 + 733984b"
             " - 3w^4 u + 471048) + 1771830]t^4 - (232a^2 + 8(104b + 259)a + 385b^2 + 2207b + 2761)w^3 t^3 u^2"
             " + 3(768a^3 + 8a^2(416b + 1029) + 32a(104b^2 + 602b + 831) + 768b^3 + 8321b^2 + 26335b"
             " + 25213)w^2 t^2 u^2 - 16(512a^4 + 32a^3(100b + 239) + 32a^2(168b^2 + 913b + 1227)"
             " + 4a(800b^3 + 7304b^2 + 21682b + 20973) + 512b^4 + 7648b^3 + 39216b^2 + 83658b + 63279)w t u^2"
             " + 2[5120a^5 + 1024a^4(41b + 94) + 128a^3(784b^2 + 4040b + 5255) + 64a^2(1568b^3 + 13152b^2"
             " + 37202b + 35213) + 4a(10496b^4 + 129280b^3 + 595232b^2 + 1209232b - w^4 u + 911949) + 5120b^5"
             " + 96256b^4 - 11w^4 u + 672640b^3 + 2253440b^2 - 4b(w^4 u - 911745) + 2284416]u^2]"),
    ((2, 0), "[128(88a^2 - 16a - b^2 + b + 11)w^4 t^2 - 256a^2(464a^3 + 8(50b + 7) - 2a(35b^2 + 117b + 23)"
             " - 6b^3 - 29b^2 + 29b + 21)t w^3 + 256(704a^4 + 16a^3(88b + 25) + 8a^2(87b^2 + 35b + 10)"
             " - 2a(8b^3 + 59b^2 - 43b - 25) - 8b^4 + 2b^3 + 93b^2 + 67b + 11)w^2]"),
    ((1, 1), "-1024[-8(2b + 1)(2b + 3)w^4 t^5 - 2(2b + 1)(168a^2 + 16(14b + 33)a - 31b^2 + 7b + 121)w^3 t^4"
             " + 8(2b + 1)(488a^3 + 8(133b + 241)a^2 + (577b^2 + 2391b + 2271)a + b^3 + 289b^2 + 887b + 653)w^2 t^3"
             " - 8(2a + 1)(2b + 1)(896a^3 + 16a^2(168b + 229) + 16a(168b^2 + 458b + 291) + 896b^3 + 3664b^2"
             " + 4656b + 1809)w t^2 + [16384a^5(2b + 1) + 4096a^4(32b^2 + 58b + 21) + 2048a^3(96b^3 + 308b^2"
             " + 292b + 81) + 8a^2(16384b^4 + 78848b^3 + 128000b^2 + 82944b - 3u w^4 + 18304) + 8a(4096b^5"
             " + 29696b^4 + 74752b^3 + 82944b^2 + 4(3w^4 u + 10304)b + 21w^4 u + 7488) + 16384b^5 + 86016b^4"
             " + 73w^4 u + 165888b^3 + 11b^2(3w^4 u + 13312) + 3b(37w^4 u + 19968) + 9216]t + [320a^3"
             " - 8a^2(24b + 71) - 24a(27b^2 + 97b + 80) - 136b^3 - 803b^2 - 1229b - 611]w^3 u]"),
    ((0, 2), "256[256(2b + 1)(2b + 3)w^4 t^8 - 256(8a + 6b + 27)(2b + 1)(2b + 3)w^3 t^7 + 32(2b + 1)(2b + 3)"
             "(472a^2 + 16(36b + 155)a + 191b^2 + 1681b + 3683)w^2 t^6 - 512(2b + 1)(2b + 3)(96a^3"
             " + 4a^2(56b + 197) + (160b^2 + 1164b + 2119) + 32b^3 + 376b^2 + 1440b + 1827)w t^5 + [65536b^6"
             " + 1081344b^5 + 6905856b^4 + 21886976b^3 + (35698944 - 1443w^4 u)b^2 + (27362304 - 4125w^4 u)b"
             " - 3184w^4 u + 65536a^4(2b + 1)(2b + 8192a^3(104b^3 + 524b^2 + 710b + 237) + 16a^2(61440b^4"
             " + 505856b^3 + 1417984b^2 + 1499136b - 19w^4 u + 454464) + 16a(28672b^5 + 337920b^4 + 1498368b^3"
             " + 3033728b^2 - 48(3w^4 u - 55636)b - 197w^4 u + 743904) + 7093440]t^4 + 32(72a^3 + 24(29b + 46)a^2"
             " + (993b^2 + 3975b + 3709)a + 195b^3 + 1618b^2 + 3302b + 1955)w^3 t^3 u - 24(1024a^4"
             " + 96(96b + 143)a^3 + 8(2048b^2 + 7804b + 7051)a^2 + 4(2304b^3 + 15873b^2 + 33471b + 22213)a"
             " + 1024b^4 + 14092b^3 + 56707b^2 + 84429b + 41523)w^2 t^2 u + 256(256a^5 + 192(16b + 23)a^4"
             " + 32(248b^2 + 886b + 765)a^3 + 32(248b^3 + 1496b^2 + 2945b + 1891)a^2 + 4(768b^4 + 7088b^3"
             " + 23548b^2 + 33276b + 16977)a + 256b^5 + 4416b^4 + 24432b^3 + 60140b^2 + 67068b + 27333)w t u"
             " + (-65536a^6 - 32768(30b + 41)a^5 - 24576(136b^2 + 452b + 373)a^4 - 2048(2368b^3 + 12992b^2"
             " + 24036b + 14839)a^3 - 16(208896b^4 + 1662976b^3 + 5007360b^2 + 6692864b - 47w^4 u"
             " + 3328016)a^2 - 16(61440b^5 + 694272b^4 + 3076608b^3 + 6692480b^2 + (7104112 - 48w^4 u)b"
             " - 61w^4 u + 2932896)a - 65536b^6 - 1343488b^5 - 9166848b^4 + 411b^2 w^4 u + 1317b w^4 u"
             " + 1544w^4 u - 30384128b^3 - 53208320b^2 - 46851456b - 16147584)u]"),
    ((1, 0), "[256(112a^3 + 8(6b - 7)a^2 - 2(33b^2 + 87b + 29)a - 2b^3 - 31b^2 - 17b - 1)w^4 t"
             " - 256(4a + 4b + 1)(112a^3 + 8(6b - 7)a^2 - 2(33b^2 + 87b + 29)a - 2b^3 - 31b^2 - 17b - 1)w^3]"),
    ((0, 1), "[-128(2b + 1)(304a^2 + 16(48b + 53)a + 163b^2 + 413b + 496)w^4 t^4 + 256(496a^3 + 16a^2(47b + 27)"
             " + a(411b^2 + 181b - 56) + 155b^3 + 318b^2 + 399b + 246)w^4 u + 4096(2b + 1)(72a^3 + 8a^2(29b + 51)"
             " + a(161b^2 + 663b + 613) + b^3 + 81b^2 + 231b + 152)w^3 t^3 - 3072(2b + 1)(1024a^4 + 96a^3(32b + 47)"
             " + 8a^2(384b^2 + 1236b + 943) + 4a(256b^3 + 1473b^2 + 2495b + 1237) + 516b^3 + 2175b^2 + 2737b"
             " + 1047)w^2 t^2 + 262144(2a + 1)(2b + 1)[16a^4 + 4a^3(16b + 19) + 4a^2(24b^2 + 57b + 31)"
             " + a(64b^3 + 228b^2 + 248b + 81) + (4b + 3)(2b + 3)(2b + 1)(b + 2)]w t - 256[32768a^6(2b + 1)"
             " + 16384a^5(10b + 11)(2b + 1) + 4096a^4(160b^3 + 440b^2 + 366b + 93) + 1024a^3(64b^4 + 2560b^3"
             " + 3512b^2 + 1954b + 379) + 128a^2(2b + 1)(1280b^4 + 6400b^3 + 10848b^2 + 7232b + 1577)"
             " + 128a(2b + 1)(256b^5 + 1920b^4 + 4896b^3 + 5368b^2 + 2509b + 399) + 32(2b + 1)^2(4b + 1)(4b + 3)"
             "(16b^2 + 56b + 51)]]"),
]


# ---------------------------------------------------------------------------
# parsing

_SYMBOLS = ("t", "u", "a", "b", "w")


def parse_coefficient(text):
    """Expand one printed coefficient into ``{(i, j, ea, eb, ew): Fraction}``
    for t^i u^j a^ea b^eb w^ew."""
    import sympy
    from sympy.parsing.sympy_parser import (
        convert_xor,
        implicit_multiplication_application,
        parse_expr,
        standard_transformations,
    )

    syms = sympy.symbols(_SYMBOLS)
    local = dict(zip(_SYMBOLS, syms))
    expr = parse_expr(
        text.replace("[", "(").replace("]", ")"),
        local_dict=local,
        transformations=standard_transformations + (implicit_multiplication_application, convert_xor),
    )
    poly = sympy.Poly(sympy.expand(expr), *syms)
    out = {}
    for exps, c in poly.terms():
        c = sympy.Rational(c)
        out[tuple(int(e) for e in exps)] = Fraction(int(c.p), int(c.q))
    return out


def scaling_defects(rows, k):
    """Terms whose scaling dimension differs from that of an order-2k
    integral (t ~ 2, u ~ 2k, dt ~ -2, du ~ -2k, w ~ -2)."""
    bad = []
    for (m, n), text in rows:
        for (i, j, _, _, ew), c in parse_coefficient(text).items():
            dim = 2 * i + 2 * k * j - 2 * m - 2 * k * n - 2 * ew
            if dim != -2 * k:
                bad.append(((m, n), (i, j, ew), c, dim))
    return bad


# Corrections as (m, n) -> [(printed text, used text)].
Y4_ERRATA = {
    # overall factor 16 does not belong on the dt^2 block
    (2, 0): [("16[w^2 t^2", "[w^2 t^2")],
    # sign of the dt du block
    (1, 1): [("-4[(2b + 1)w t^2", "4[(2b + 1)w t^2")],
}

Y8_ERRATA = {
    (0, 6): [("3920b + 8313w)u t^8", "3920b + 8313)u t^8")],
    (0, 5): [("+ 80847]u^3]", "+ 80847]u^3]u")],
    (0, 4): [("8a^2(1600a^3 + 16(380b + 1271) + a(", "8(1600a^3 + 16(380b + 1271)a^2 + a(")],
    (2, 0): [("256a^2(464a^3 + 8(50b + 7) - 2a(", "256(464a^3 + 8(50b + 7)a^2 - 2a(")],
    (0, 2): [
        ("(96a^3 + 4a^2(56b + 197) + (160b^2 + 1164b + 2119) +", "(96a^3 + 4a^2(56b + 197) + (160b^2 + 1164b + 2119)a +"),
        ("65536a^4(2b + 1)(2b + 8192a^3(", "65536a^4(2b + 1)(2b + 3) + 8192a^3("),
    ],
    (0, 1): [("1024a^3(64b^4 + 2560b^3", "1024a^3(640b^4 + 2560b^3")],
    (1, 5): [(
        "- 6(15a + 31b + 122)w t^5 u - 2(304a^2",
        "- 6(15a + 31b + 122)w t^5 u + 2(112a^2 + 2(252b + 961)a + 376b^2 + 3290b + 6939)t^4 u"
        " - 9w^2 t^2 u^2 + 6(28a + 28b + 121)w t u^2 - 2(304a^2",
    )],
}


def apply_errata(rows, errata):
    out = []
    for key, text in rows:
        for old, new in errata.get(key, ()):
            if old not in text:
                raise ValueError(f"erratum for {key} does not match the printed text")
            text = text.replace(old, new)
        out.append((key, text))
    return out


def y4_rows():
    return apply_errata(Y4_OVER_16, Y4_ERRATA)


def y8_rows():
    return apply_errata(Y8_PRINTED, Y8_ERRATA)
