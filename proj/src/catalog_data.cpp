#include "ellfib/catalog.hpp"

namespace ellfib {

namespace {
const char* const kChunks[] = {
R"cat(surface = X411
field = rationals
M = 1
A = -3*t^2*(s^2-3*t^2)
B = s*t^3*(2*s^2-9*t^2)

surface = X411n
field = rationals
M = 1
A = -3*t^2*(16*s^2-16*s*t+t^2)
B = 2*t^3*(2*s-t)*(32*s^2-32*s*t-t^2)

surface = X141
field = rationals
M = 1
A = -3*(s-2*t)^2*(s^2-3*t^2)
B = s*(s-2*t)^3*(2*s^2-9*t^2)

surface = X141n
field = rationals
M = 1
A = -3*t^2*(16*t^2-16*s*t+s^2)
B = 2*t^3*(s-2*t)*(s^2+32*s*t-32*t^2)

surface = X141phi
field = rationals
M = 1
A = -3*t^2*(t^2+14*s*t+s^2)
B = -2*(t+s)*t^3*(t^2-34*s*t+s^2)

surface = X222
field = rationals
M = 1
A = -3*s*t*(s-t)^2
B = (s-t)^3*(s^3+t^3)

surface = X222q
field = rationals
M = 1
A = -3*(s^2-s*t+t^2)*(s-t)^2
B = (s-2*t)*(2*s-t)*(t+s)*(s-t)^3

surface = X431
field = rationals
M = 1
A = -3*(s-t)^3*(s-9*t)
B = -2*(s-t)^4*(s^2+18*s*t-27*t^2)

surface = X321
field = rationals
M = 1
A = -3*(s-t)^3*(s-4*t)
B = -2*(s-t)^5*(s+8*t)

map = pi4
field = rationals
N = 256*s^3*(s-t)
D = -27*t^4
identity_check = (4*s-3*t)^2*(16*s^2+8*s*t+3*t^2)
quoted = yes

map = pi2
field = rationals
N = 64*s^3*(s-t)
D = (8*s^2-4*s*t-t^2)^2
identity_check = -(8*s + t)*(t)^3

map = pi34
field = rationals
N = 27*s^4*(125*t^2-90*s*t-27*s^2)
D = -3125*t^3*(t-s)^2*(5*t+4*s)
identity_check = (25*t^2-10*s*t-9*s^2)^3
quoted = yes

map = pi53
field = rationals
N = 729*s^5*(s-t)
D = -t^3*(135*s^3-9*s*t^2-t^3)
identity_check = (9*s^2-3*s*t-t^2)^3
quoted = yes
printed_D = -t^3*(135*s^3+9*s*t^2+t^3)
printed_lhs = (729*s^5*(s-t)) - (-t^3*(135*s^3+9*s*t^2+t^3))
printed_rhs = (9*s^2-3*s*t-t^2)^3
erratum = printed +9st^2+t^3 in the denominator, the identity holds with -9st^2-t^3

map = pi52
field = rationals
N = 2^6*3^3*s^5*t
D = -(s^2-4*s*t-t^2)^2*(125*s^2+22*s*t+t^2)
identity_check = (5*s^2+10*s*t+t^2)^3
quoted = yes

map = pi43
field = rationals
N = 729*s^4*t^2
D = -(s-t)^3*(8*s^3+120*s^2*t-21*s*t^2+t^3)
identity_check = (2*s^2+8*s*t-t^2)^3
quoted = yes
printed_lhs = (729*s^4*t^2) - (-(s-t)^3*(8*s^3+120*s^2*t-21*s*t^2+t^3))
printed_rhs = (2*s^2-8*s*t-t^2)^3
erratum = printed identity has 2s^2-8st-t^2, the cube is 2s^2+8st-t^2

map = m71a
field = rationals
N = s^7*(s-4*t)
D = -4*t^5*(14*s^3+14*t*s^2+20*t^2*s+25*t^3)
identity_check = (10*t^4+4*s*t^3+2*s^2*t^2+2*s^3*t-s^4)^2
quoted = yes
printed_lhs = (s^7*(s-4*t)) - (-4*t^5*(14*s^3+14*t*s^2+20*t^2*s+25*t^3))
printed_rhs = (10*t^4+4*s*t^3+2*s^2*t^2-2*s^3*t-s^4)^2
erratum = printed identity has -2s^3t, the square needs +2s^3t

map = m71b
field = rationals
N = 1728*s^7*t
D = -(s^2-5*s*t+t^2)^3*(49*s^2-13*s*t+t^2)
identity_check = (t^4-14*s*t^3+63*s^2*t^2-70*s^3*t-7*s^4)^2
quoted = yes
printed_D = -(s^2-5*s*t+t^2)^3*(7*s^2-13*s*t+t^2)
printed_lhs = (1728*s^7*t) - (-(s^2-5*s*t+t^2)^3*(7*s^2-13*s*t+t^2))
printed_rhs = (t^4-14*s*t^3+63*s^2*t^2-70*s^3*t-7*s^4)^2
erratum = printed 7s^2-13st+t^2 in the denominator, the identity holds with 49s^2-13st+t^2

map = m71c
field = rationals
N = s^7*(s+24*t)
D = 16*t^3*(7*s^2-14*s*t+6*t^2)^2*(2*s-t)
identity_check = (24*t^4-80*t^3*s+72*s^2*t^2-12*s^3*t-s^4)^2
quoted = yes
printed_lhs = (s^7*(s+48*t)) - (16*t^3*(7*s^2-14*s*t+6*t^2)^2*(2*s-t))
printed_rhs = (24*t^4-80*t^3*s+72*s^2*t^2-12*s^3*t-s^4)^2
erratum = printed identity uses s+48t on the left, the map and the identity agree with s+24t

map = m53a
field = rationals
N = s^5*(s-4*t)^3
D = 4*t^5*(6*s^3-22*s^2*t-12*s*t^2-9*t^3)
identity_check = (6*t^4+4*s*t^3+6*s^2*t^2-6*s^3*t+s^4)^2
quoted = yes
printed_N = s^5*(s-2*t)^3
printed_lhs = (s^5*(s-2*t)^3) - (4*t^5*(6*s^3-22*s^2*t-12*s*t^2-9*t^3))
printed_rhs = (6*t^4+4*s*t^3+6*s^2*t^2-6*s^3*t+s^4)^2
erratum = printed (s-2t)^3 in the numerator, the identity holds with (s-4t)^3

map = m53b
field = rationals
N = s^5*(s-8*t)^3
D = 4*t^4*(3*s+t)^2*(5*s^2-42*s*t-9*t^2)
identity_check = (s^4-12*s^3*t+24*s^2*t^2+32*s*t^3+6*t^4)^2
quoted = yes
printed_lhs = (s^5*(s-8*t)^3) - (4*t^4*(3*s+t)^2*(5*s^2-42*s*t-9*t^2))
printed_rhs = (s^4-12*s^3*t+24*s^2*t^2+32*s*t^3+3*t^4)^2
erratum = printed identity has 3t^4, the square needs 6t^4

map = m53c
field = rationals
N = 4*s^5*(9*s-4*t)^3
D = -t^3*(4*s+t)*(10*s^2-6*s*t+t^2)^2
identity_check = (54*s^4-36*s^3*t+4*s^2*t^2+4*s*t^3-t^4)^2
quoted = yes

map = m611
field = rationals
N = 4*s^6*(9*s^2+24*s*t+70*t^2)
D = t^5*(14*s-5*t)^2*(4*s-t)
identity_check = (5*t^4-24*t^3*s+18*s^2*t^2+8*s^3*t+6*s^4)^2
quoted = yes

map = m521a
field = rationals
N = 2^6*s^5*(24*s-7*t)^2*(4*s+3*t)
D = -t^4*(7*s-t)^3*(15*s-t)
identity_check = (t^4-18*t^3*s+69*s^2*t^2-32*s^3*t-384*s^4)^2
quoted = yes
printed_N = 2^8*s^5*(24*s-7*t)^2*(4*s+3*t)
printed_lhs = (2^8*s^5*(24*s-7*t)^2*(4*s+3*t)) - (-t^4*(7*s-t)^3*(15*s-t))
printed_rhs = (t^4-18*t^3*s+69*s^2*t^2-32*s^3*t-384*s^4)^2
erratum = printed leading constant 2^8, the identity holds with 2^6

map = m521b
field = rationals
N = 9*s^5*(s+6*t)^2*(9*s+4*t)
D = -4*t^2*(10*s^2+24*s*t+9*t^2)^3
identity_check = (9*s^4+56*s^3*t+234*s^2*t^2+216*s*t^3+54*t^4)^2
quoted = yes

map = pi3
field = rationals
N = s^3*(s-2*t)
D = t^3*(t-2*s)
identity_check = (s + t)*(s - t)^3

map = piE
field = rationals
N = s*(s^2-5*s*t+5*t^2)^2
D = 4*t^5
identity_check = (s-4*t)*(s^2-3*t*s+t^2)^2
quoted = yes

map = piF
field = rationals
N = 4*s^3*(3*s-5*t)^2
D = t^4*(15*s+2*t)
identity_check = (s - 2*t)*(6*s^2 - 4*s*t - t^2)^2

map = piG
field = rationals
N = s^3*(4*s-5*t)^2
D = -t^3*(4*t-5*s)^2
identity_check = (s + t)*(4*s^2 - 7*s*t + 4*t^2)^2
printed_D = t^3*(4*t-5*s)^2
erratum = printed denominator lacks the sign, as printed the map is unramified over 1

map = piH
field = rationals
N = 64*t^5
D = (t-s)^3*(9*s^2-33*s*t+64*t^2)
identity_check = (s)*(3*s^2 - 10*s*t + 15*t^2)^2

map = piI
field = extension: x^2+1
N = s^4*(s-5*t)
D = t^4*(2*a-11)*(5*s+(3+4*a)*t)
identity_check = (s + (-2*a + 1)*t)*(s^2 + (a - 3)*s*t + (-4*a - 3)*t^2)^2

)cat",
R"cat(map = piA
field = rationals
N = 4*(s^2-4*s*t+t^2)^3
D = 27*t^4*s*(s-4*t)
identity_check = (2*s^3 - 12*s^2*t + 15*s*t^2 + 2*t^3)^2

map = piA2
field = rationals
N = 4*s^3*(s-2*t)^3
D = t^4*(3*s^2-6*s*t-t^2)
identity_check = (2*s^3 - 6*s^2*t + 3*s*t^2 + t^3)^2

map = piB
field = rationals
N = -4*t^5*(6*s+t)
D = s^3*(2*s-5*t)^2*(s-4*t)
identity_check = -(2*s^3 - 9*s^2*t + 6*s*t^2 + 2*t^3)^2

map = piC
field = rationals
N = -s^4*(s^2+2*s*t+5*t^2)
D = 4*t^5*(t-2*s)
identity_check = -(s^3 + s^2*t + 2*s*t^2 - 2*t^3)^2

map = tri1
field = rationals
N = s^3
D = t^3
identity_check = (s^3 - t^3)

map = tri2
field = rationals
N = s^2*(3*t-2*s)
D = t^3
identity_check = -(2*s + t)*(s - t)^2

map = e71
field = extension: 2*x^2-7*x+28
N = s^7*(s+2*a*t)
D = (10633/4*a-2401)/40*t^4*(s-t)^2*(s^2+(6-2*a)*s*t/5+(3*a-14)*t^2/10)
identity_check = (s^4 + a*s^3*t + (-7/4*a + 7)*s^2*t^2 + (-7/8*a - 49/2)*s*t^3 + (49/40*a + 147/10)*t^4)^2

map = e611
field = extension: 3*x^2-3*x+7
N = s^6*(s^2+4*a*s*t-(19/5*a+14/15)*t^2)
D = (1763*a-259)/20*t^4*(s-t)^3*(s-(4*a-7)/5*t)
identity_check = (s^4 + 2*a*s^3*t + (-39/10*a + 21/5)*s^2*t^2 + (-3/5*a - 91/5)*s*t^3 + (23/10*a + 63/5)*t^4)^2
printed_N = s^6*(s^2+4*a*s*t-(19*a+14)/5*t^2)
erratum = printed t^2 coefficient -(19v+14)/5, the fibre over 1 is (2,2,2,2) only with -(19v/5+14/15)

map = e521
field = extension: 7*x^3+19*x^2+16*x+8
N = 112*s^5*(s-2*t)^2*(s+4*(a+1)*t)
D = -(15*a^2+55*a+52)*t^5*(4*s+(3*a^2+3*a-4)*t)^2*(8*s-(7*a^2+15*a+4)*t)
identity_check = 112*(s^4 + 2*a*s^3*t + (-2*a^2 - 8*a - 6)*s^2*t^2 + (36/7*a^2 + 76/7*a + 24/7)*s*t^3 + (-222/49*a^2 - 240/49*a + 286/49)*t^4)^2
printed_N = 167*s^5*(s-2*t)^2*(s+4*(a+1)*t)
erratum = printed leading constant 167, the fibre over 1 is (2,2,2,2) only with 112

map = e431
field = extension: 7*x^2+8*x+2
N = 2^4*7^3*s^4*(s-t)^3*(s+(8*a+3)*t)
D = (8*a+3)*t^4*(14*s+(9*a+4)*t)^3*(2*s-(5*a+4)*t)
identity_check = 5488*(s^4 + 4*a*s^3*t + (-20/7*a - 5/7)*s^2*t^2 + (88/49*a + 36/49)*s*t^3 + (-36/343*a - 25/686)*t^4)^2

map = pitilde
field = extension: 5*x^3+12*x^2+12*x+4
N = s^3*(s-t)^2*(s+(2+3*a)*t)
D = -(2+3*a)*t^3*(s+(1+a)^2*t)^2*(s+t/(5*a+2))
identity_check = (s^2 + a*s*t + (-a^2 - 2*a - 1)*t^2)^3

entry = x411-raw
group = base
base = X411
expect = [1,1,4*]

entry = x411-norm
group = base
base = X411
pre = (4*s-2*t : t)
expect = [1,1,4*]
printed = X411n

entry = x141-raw
group = base
base = X141
expect = [1,4,1*]

entry = x141-norm
group = base
base = X141n
expect = [1,4,1*]

entry = x141-phi
group = base
base = X141n
pre = 1,0,inf
expect = [1,4,1*]
printed = X141phi

entry = x222-raw
group = base
base = X222
expect = [2,2,2*]

entry = x222-rational
group = base
base = X222q
expect = [2,2,2*]

entry = x431
group = base
base = X431
expect = [1,3,IV*]

entry = x321
group = base
base = X321
expect = [1,2,III*]

entry = fig2
group = s4
base = X411
pre = (4*s-2*t : t)
map = pi4
expect = [1,1,1,2,3,16]
post = (-3*s : 8*t)
printed_A = -27*s^8-144*s^7*t-192*s^6*t^2-144*s^4*t^4-384*s^3*t^5-48*t^8
printed_B = -54*s^12-432*s^11*t-1152*s^10*t^2-1024*s^9*t^3-432*s^8*t^4-2304*s^7*t^5-3072*s^6*t^6-720*s^4*t^8-1920*s^3*t^9+128*t^12

entry = fig3
group = s4
base = X411
pre = (4*s-2*t : t)
map = pi2
expect = [1,1,3,3,8,8]
post = (-s : -2*t)
printed_A = -48*s^8+192*s^7*t-192*s^6*t^2+672*s^5*t^3-1176*s^4*t^4-336*s^3*t^5-48*s^2*t^6-24*s*t^7-3*t^8
printed_B = -128*s^12+768*s^11*t-1536*s^10*t^2-3200*s^9*t^3+15840*s^8*t^4-12672*s^7*t^5-6336*s^5*t^7-3960*s^4*t^8-400*s^3*t^9+96*s^2*t^10+24*s*t^11+2*t^12

entry = fig4
group = s4
base = X141n
map = pi4
expect = [1,1,2,4,4,12]
post = (3*s : 4*t)
printed_A = -27*s^8+72*s^7*t-48*s^6*t^2-144*s^4*t^4+192*s^3*t^5-48*t^8
printed_B = -54*s^12+216*s^11*t-288*s^10*t^2+128*s^9*t^3+540*s^8*t^4-1440*s^7*t^5+960*s^6*t^6+576*s^4*t^8-768*s^3*t^9+128*t^12

entry = fig5
group = s4
base = X141phi
map = pi4
expect = [1,3,4,4,4,8]
post = (-3*s : 4*t)
printed_A = -27*s^8-72*s^7*t-48*s^6*t^2+126*s^4*t^4+168*s^3*t^5-3*t^8
printed_B = 54*s^12+216*s^11*t+288*s^10*t^2+128*s^9*t^3+594*s^8*t^4+1584*s^7*t^5+1056*s^6*t^6-198*s^4*t^8-264*s^3*t^9-2*t^12

entry = fig6
group = s4
base = X141n
map = pi2
expect = [1,2,2,3,4,12]
post = (s : 2*t)
printed_A = -3*s^8+12*s^7*t-12*s^6*t^2-48*s^5*t^3+84*s^4*t^4+24*s^3*t^5-48*s^2*t^6-24*s*t^7-3*t^8
printed_B = -2*s^12+12*s^11*t-24*s^10*t^2+76*s^9*t^3-225*s^8*t^4+180*s^7*t^5+252*s^6*t^6-288*s^5*t^7-180*s^4*t^8+104*s^3*t^9+96*s^2*t^10+24*s*t^11+2*t^12

entry = fig7
group = s4
base = X222q
pre = inf,0,1
map = pi4
expect = [2,2,2,4,6,8]
post = (-3*s : -4*t)
printed_A = -27*s^8+72*s^7*t-48*s^6*t^2-9*s^4*t^4+12*s^3*t^5-3*t^8
printed_B = -54*s^12+216*s^11*t-288*s^10*t^2+128*s^9*t^3-27*s^8*t^4+72*s^7*t^5-48*s^6*t^6+9*s^4*t^8-12*s^3*t^9+2*t^12

entry = fig8
group = s4
base = X222q
pre = 0,inf,1
map = pi2
expect = [2,2,4,4,6,6]
post = (-s : -2*t)
printed_A = -48*s^8+192*s^7*t-192*s^6*t^2-48*s^5*t^3+84*s^4*t^4+24*s^3*t^5-48*s^2*t^6-24*s*t^7-3*t^8
printed_B = 128*s^12-768*s^11*t+1536*s^10*t^2-832*s^9*t^3-720*s^8*t^4+576*s^7*t^5+288*s^5*t^7+180*s^4*t^8-104*s^3*t^9-96*s^2*t^10-24*s*t^11-2*t^12

entry = fig9
group = s5
base = X431
map = pi34
expect = [1,2,3,3,3,12]
post = (5*s : t)
printed_twist = 3
printed_A = -2187*s^8-1944*s^7*t+324*s^6*t^2+2952*s^5*t^3+150*s^4*t^4-552*s^3*t^5+36*s^2*t^6+24*s*t^7-3*t^8
printed_B = -39366*s^12-52488*s^11*t-2916*s^10*t^2-87480*s^9*t^3-51570*s^8*t^4+33552*s^7*t^5+20216*s^6*t^6-7728*s^5*t^7-1770*s^4*t^8+760*s^3*t^9+12*s^2*t^10-24*s*t^11+2*t^12

entry = fig10
group = s5
base = X431
pre = inf,1,0
map = pi34
expect = [1,1,3,4,6,9]
post = (5*s : t)
printed_A = -177147*s^8-157464*s^7*t+26244*s^6*t^2+23112*s^5*t^3-3450*s^4*t^4-552*s^3*t^5+36*s^2*t^6+24*s*t^7-3*t^8
printed_B = 28697814*s^12+38263752*s^11*t+2125764*s^10*t^2-9710280*s^9*t^3-371790*s^8*t^4+905904*s^7*t^5-14168*s^6*t^6-40656*s^5*t^7+6810*s^4*t^8-760*s^3*t^9-12*s^2*t^10+24*s*t^11-2*t^12

entry = fig11
group = s5
base = X431
map = pi53
expect = [1,1,1,3,3,15]
post = (-s : -3*t)
printed_A = -3*s^8+12*s^7*t-6*s^6*t^2-144*s^5*t^3+135*s^4*t^4+216*s^3*t^5-54*s^2*t^6-108*s*t^7-27*t^8
printed_B = -2*s^12+12*s^11*t-18*s^10*t^2+180*s^9*t^3-540*s^8*t^4-108*s^7*t^5+1638*s^6*t^6+108*s^5*t^7-1620*s^4*t^8-540*s^3*t^9+486*s^2*t^10+324*s*t^11+54*t^12

)cat",
R"cat(entry = fig12
group = s5
base = X431
pre = inf,1,0
map = pi53
expect = [1,3,3,3,5,9]
post = (-s : -3*t)
printed_A = -27*s^8+108*s^7*t-54*s^6*t^2-96*s^5*t^3+15*s^4*t^4+24*s^3*t^5-6*s^2*t^6-12*s*t^7-3*t^8
printed_B = 54*s^12-324*s^11*t+486*s^10*t^2+180*s^9*t^3-540*s^8*t^4-108*s^7*t^5+238*s^6*t^6+108*s^5*t^7+60*s^4*t^8+20*s^3*t^9-18*s^2*t^10-12*s*t^11-2*t^12
note = printed A contains a stray hyphenation mark

entry = fig13
group = s5
base = X431
map = pi52
expect = [1,1,2,2,3,15]
printed_twist = 3
printed_A = -1875*s^8+8040*s^7*t-420*s^6*t^2-64392*s^5*t^3-48450*s^4*t^4-13800*s^3*t^5-1860*s^2*t^6-120*s*t^7-3*t^8
printed_B = 31250*s^12-201000*s^11*t+225972*s^10*t^2-1882600*s^9*t^3+3028350*s^8*t^4+7698480*s^7*t^5+5316760*s^6*t^6+1825392*s^5*t^7+360750*s^4*t^8+43000*s^3*t^9+3060*s^2*t^10+120*s*t^11+2*t^12

entry = fig14
group = s5
base = X431
pre = inf,1,0
map = pi52
expect = [1,3,3,5,6,6]
printed_A = -1875*s^8-222360*s^7*t-461220*s^6*t^2-110472*s^5*t^3-48450*s^4*t^4-13800*s^3*t^5-1860*s^2*t^6-120*s*t^7-3*t^8
printed_B = -31250*s^12+8265000*s^11*t+97703244*s^10*t^2+103489000*s^9*t^3+80837250*s^8*t^4+12622800*s^7*t^5-3381400*s^6*t^6-1760880*s^5*t^7-360750*s^4*t^8-43000*s^3*t^9-3060*s^2*t^10-120*s*t^11-2*t^12

entry = fig15
group = s5
base = X431
map = pi43
expect = [1,1,1,3,6,12]
printed_twist = 3
printed_A = -48*s^8-768*s^7*t-624*s^6*t^2+4416*s^5*t^3-9696*s^4*t^4+5568*s^3*t^5-1128*s^2*t^6+96*s*t^7-3*t^8
printed_B = 128*s^12+3072*s^11*t+14784*s^10*t^2-30464*s^9*t^3+22320*s^8*t^4-260352*s^7*t^5+440112*s^6*t^6-320832*s^5*t^7+109584*s^4*t^8-19520*s^3*t^9+1896*s^2*t^10-96*s*t^11+2*t^12

entry = fig16
group = s5
base = X431
pre = inf,1,0
map = pi43
expect = [2,3,3,3,4,9]
printed_A = -48*s^8-768*s^7*t-39504*s^6*t^2-151104*s^5*t^3+9744*s^4*t^4+5568*s^3*t^5-1128*s^2*t^6+96*s*t^7-3*t^8
printed_B = -128*s^12-3072*s^11*t+202944*s^10*t^2+2643200*s^9*t^3+18920016*s^8*t^4+11582208*s^7*t^5-5502288*s^6*t^6+974016*s^5*t^7-136800*s^4*t^8+19520*s^3*t^9-1896*s^2*t^10+96*s*t^11-2*t^12

entry = fig17
group = s6
base = X321
map = m71a
twist = all-starred
expect = [1,1,1,2,5,14]
post = (-2*s : t)
printed_A = -48*s^8-96*s^7*t+336*s^3*t^5-168*s^2*t^6+120*s*t^7-75*t^8
printed_B = -128*s^12-384*s^11*t-192*s^10*t^2+64*s^9*t^3-48*s^8*t^4-1632*s^7*t^5-896*s^6*t^6+1152*s^5*t^7-1584*s^4*t^8+2288*s^3*t^9-1080*s^2*t^10+600*s*t^11-250*t^12

entry = fig18
group = s6
base = X321
pre = inf,1,0
map = m71a
twist = all-starred
expect = [1,2,2,2,7,10]
post = (-s : t)
printed_twist = 2
printed_A = -3*s^8-12*s^7*t+42*s^3*t^5-42*s^2*t^6+60*s*t^7-75*t^8
printed_B = 2*s^12+12*s^11*t+12*s^10*t^2-8*s^9*t^3+12*s^8*t^4-66*s^7*t^5+14*s^6*t^6-36*s^5*t^7+99*s^4*t^8-286*s^3*t^9+270*s^2*t^10-300*s*t^11+250*t^12

entry = fig19
group = s6
base = X321
map = m71b
twist = all-starred
expect = [1,1,2,3,3,14]
printed_twist = -2
printed_A = -147*s^8+948*s^7*t-12054*s^6*t^2+25872*s^5*t^3-17745*s^4*t^4+5712*s^3*t^5-966*s^2*t^6+84*s*t^7-3*t^8
printed_B = -686*s^12+6636*s^11*t+84882*s^10*t^2-564620*s^9*t^3+1657908*s^8*t^4-2002500*s^7*t^5+1256850*s^6*t^6-467460*s^5*t^7+109620*s^4*t^8-16492*s^3*t^9+1554*s^2*t^10-84*s*t^11+2*t^12

entry = fig20
group = s6
base = X321
pre = inf,1,0
map = m71b
twist = all-starred
expect = [1,2,2,6,6,7]
printed_twist = -1
printed_A = -147*s^8-18492*s^7*t-12054*s^6*t^2+25872*s^5*t^3-17745*s^4*t^4+5712*s^3*t^5-966*s^2*t^6+84*s*t^7-3*t^8
printed_B = 686*s^12-197148*s^11*t-1990002*s^10*t^2+2279228*s^9*t^3-2038932*s^8*t^4+2029716*s^7*t^5-1256850*s^6*t^6+467460*s^5*t^7-109620*s^4*t^8+16492*s^3*t^9-1554*s^2*t^10+84*s*t^11-2*t^12

entry = fig21
group = s6
base = X321
map = m71c
twist = all-starred
expect = [1,2,2,2,3,14]
post = (2*s : t)
printed_twist = -1
printed_A = -3*s^8-36*s^7*t+2352*s^5*t^3-5292*s^4*t^4+4536*s^3*t^5-1848*s^2*t^6+360*s*t^7-27*t^8
printed_B = 2*s^12+36*s^11*t+108*s^10*t^2+2724*s^9*t^3+11997*s^8*t^4-92772*s^7*t^5+192192*s^6*t^6-198432*s^5*t^7+118260*s^4*t^8-42568*s^3*t^9+9144*s^2*t^10-1080*s*t^11+54*t^12

entry = fig22
group = s6
base = X321
pre = inf,1,0
map = m71c
twist = all-starred
expect = [1,2,4,4,6,7]
printed_twist = 2
printed_A = -3*s^8-72*s^7*t+1176*s^5*t^3-5292*s^4*t^4+9072*s^3*t^5-7392*s^2*t^6+2880*s*t^7-432*t^8
printed_B = 2*s^12+72*s^11*t+432*s^10*t^2-2904*s^9*t^3+6732*s^8*t^4-47520*s^7*t^5+192192*s^6*t^6-396864*s^5*t^7+473040*s^4*t^8-340544*s^3*t^9+146304*s^2*t^10-34560*s*t^11+3456*t^12

entry = fig23
group = s6
base = X321
map = m53a
twist = all-starred
expect = [1,1,1,5,6,10]
post = (2*s : t)
printed_A = -48*s^8+288*s^7*t-576*s^6*t^2+384*s^5*t^3+144*s^3*t^5-264*s^2*t^6-72*s*t^7-27*t^8
printed_B = -128*s^12+1152*s^11*t-4032*s^10*t^2+6720*s^9*t^3-5040*s^8*t^4+288*s^7*t^5+3648*s^6*t^6-4608*s^5*t^7+720*s^4*t^8+560*s^3*t^9+936*s^2*t^10+216*s*t^11+54*t^12

entry = fig24
group = s6
base = X321
pre = inf,1,0
map = m53a
twist = all-starred
expect = [2,2,2,3,5,10]
printed_twist = 2
printed_A = -3*s^8+36*s^7*t-144*s^6*t^2+192*s^5*t^3+18*s^3*t^5-66*s^2*t^6-36*s*t^7-27*t^8
printed_B = 2*s^12-36*s^11*t+252*s^10*t^2-840*s^9*t^3+1260*s^8*t^4-522*s^7*t^5+6*s^6*t^6-612*s^5*t^7-45*s^4*t^8-70*s^3*t^9-234*s^2*t^10-108*s*t^11-54*t^12

entry = fig25
group = s6
base = X321
map = m53b
twist = all-starred
expect = [1,1,2,4,6,10]
post = (2*s : t)
printed_A = -48*s^8+576*s^7*t-2304*s^6*t^2+3072*s^5*t^3+2160*s^4*t^4-8352*s^3*t^5-3936*s^2*t^6-576*s*t^7-27*t^8
printed_B = -128*s^12+2304*s^11*t-16128*s^10*t^2+53760*s^9*t^3-91440*s^8*t^4+138816*s^7*t^5-284928*s^6*t^6+101376*s^5*t^7+281520*s^4*t^8+118240*s^3*t^9+21024*s^2*t^10+1728*s*t^11+54*t^12

entry = fig26
group = s6
base = X321
pre = inf,1,0
map = m53b
twist = all-starred
expect = [2,2,3,4,5,8]
printed_twist = 2
printed_A = -3*s^8+72*s^7*t-576*s^6*t^2+1536*s^5*t^3+135*s^4*t^4-1044*s^3*t^5-984*s^2*t^6-288*s*t^7-27*t^8
printed_B = 2*s^12-72*s^11*t+1008*s^10*t^2-6720*s^9*t^3+20025*s^8*t^4-13464*s^7*t^5-25536*s^6*t^6-9216*s^5*t^7-17595*s^4*t^8-14780*s^3*t^9-5256*s^2*t^10-864*s*t^11-54*t^12

entry = fig27
group = s6
base = X321
map = m53c
twist = all-starred
expect = [1,2,2,3,6,10]
post = (s : 3*t)
printed_twist = -2
printed_A = -27*s^8+108*s^7*t-144*s^6*t^2-336*s^5*t^3+1140*s^4*t^4-936*s^3*t^5-216*s^2*t^6+648*s*t^7-243*t^8
printed_B = 54*s^12-324*s^11*t+756*s^10*t^2-2340*s^9*t^3+7695*s^8*t^4-13116*s^7*t^5+5776*s^6*t^6+13536*s^5*t^7-21060*s^4*t^8+7560*s^3*t^9+5832*s^2*t^10-5832*s*t^11+1458*t^12

entry = fig28
group = s6
base = X321
pre = inf,1,0
map = m53c
twist = all-starred
expect = [2,3,4,4,5,6]
post = (s : 3*t)
printed_twist = -1
printed_A = -432*s^8+1728*s^7*t-2304*s^6*t^2+624*s^5*t^3+1140*s^4*t^4-936*s^3*t^5-216*s^2*t^6+648*s*t^7-243*t^8
printed_B = -3456*s^12+20736*s^11*t-48384*s^10*t^2+48960*s^9*t^3-3600*s^8*t^4-38208*s^7*t^5+37568*s^6*t^6-25632*s^5*t^7+21060*s^4*t^8-7560*s^3*t^9-5832*s^2*t^10+5832*s*t^11-1458*t^12

entry = fig29
group = s6
base = X321
map = m611
twist = all-starred
expect = [1,2,2,2,5,12]
printed_twist = 2
printed_A = -27*s^8-72*s^7*t-210*s^6*t^2+2352*s^3*t^5-2268*s^2*t^6+720*s*t^7-75*t^8
printed_B = -54*s^12-216*s^11*t-774*s^10*t^2-776*s^9*t^3-729*s^8*t^4-7848*s^7*t^5-3822*s^6*t^6-19008*s^5*t^7+61308*s^4*t^8-52368*s^3*t^9+19980*s^2*t^10-3600*s*t^11+250*t^12
note = printed B contains the monomial 50t^82, read as 50t^8

entry = m611-swap
group = s6
base = X321
pre = inf,1,0
map = m611
twist = all-starred
expect = [1,1,2,4,6,10]
note = no printed equation, same configuration as fig25

entry = fig30
group = s6
base = X321
map = m521a
twist = all-starred
expect = [1,2,3,4,4,10]
printed_twist = 2
printed_A = -110592*s^8-18432*s^7*t+38976*s^6*t^2-7056*s^5*t^3-15435*s^4*t^4+7644*s^3*t^5-1386*s^2*t^6+108*s*t^7-3*t^8
printed_B = -14155776*s^12-3538944*s^11*t+7335936*s^10*t^2-727040*s^9*t^3+2905920*s^8*t^4-1225296*s^7*t^5-573594*s^6*t^6+541116*s^5*t^7-167310*s^4*t^8+26760*s^3*t^9-2358*s^2*t^10+108*s*t^11-2*t^12

entry = fig31
group = s6
base = X321
pre = inf,1,0
map = m521a
twist = all-starred
expect = [1,2,2,5,6,8]
printed_A = -1769472*s^8-294912*s^7*t+623616*s^6*t^2-112896*s^5*t^3-15435*s^4*t^4+7644*s^3*t^5-1386*s^2*t^6+108*s*t^7-3*t^8
printed_B = 905969664*s^12+226492416*s^11*t-469499904*s^10*t^2+46530560*s^9*t^3+62956800*s^8*t^4-24118848*s^7*t^5+4059258*s^6*t^6-689292*s^5*t^7+167310*s^4*t^8-26760*s^3*t^9+2358*s^2*t^10-108*s*t^11+2*t^12

entry = fig32
group = s6
base = X321
map = m521b
twist = all-starred
expect = [2,2,3,3,4,10]
post = (2*s : t)
printed_A = -3888*s^8-24192*s^7*t-232176*s^6*t^2-698976*s^5*t^3-959040*s^4*t^4-642816*s^3*t^5-215784*s^2*t^6-34992*s*t^7-2187*t^8
printed_B = -93312*s^12-870912*s^11*t+5838912*s^10*t^2+54609280*s^9*t^3+200532240*s^8*t^4+413050752*s^7*t^5+507639312*s^6*t^6+384935328*s^5*t^7+182483280*s^4*t^8+53887680*s^3*t^9+9605304*s^2*t^10+944784*s*t^11+39366*t^12

entry = fig33
group = s6
base = X321
pre = inf,1,0
map = m521b
twist = all-starred
expect = [1,2,4,5,6,6]
printed_twist = 2
printed_A = -243*s^8-3024*s^7*t-13044*s^6*t^2-25488*s^5*t^3-59940*s^4*t^4-80352*s^3*t^5-53946*s^2*t^6-17496*s*t^7-2187*t^8
printed_B = 1458*s^12+27216*s^11*t+202068*s^10*t^2+784240*s^9*t^3+1339200*s^8*t^4-1099008*s^7*t^5-7024806*s^6*t^6-11891448*s^5*t^7-11405205*s^4*t^8-6735960*s^3*t^9-2401326*s^2*t^10-472392*s*t^11-39366*t^12

entry = ext-7a
group = ext
base = X321
map = e71
twist = all-starred
expect = [1,1,2,2,4,14]
field = extension: 2*x^2-7*x+28

entry = ext-7b
group = ext
base = X321
pre = inf,1,0
map = e71
twist = all-starred
expect = [1,2,2,4,7,8]
field = extension: 2*x^2-7*x+28

entry = ext-3a
group = ext
base = X321
pre = inf,1,0
map = e611
twist = all-starred
expect = [1,1,2,6,6,8]
field = extension: 3*x^2-3*x+7

entry = ext-3b
group = ext
base = X321
map = e611
twist = all-starred
expect = [1,2,2,3,4,12]
field = extension: 3*x^2-3*x+7

entry = ext-cubic
group = ext
base = X321
map = e521
twist = all-starred
expect = [1,2,2,4,5,10]
field = extension: 7*x^3+19*x^2+16*x+8

entry = ext-2
group = ext
base = X321
map = e431
twist = all-starred
expect = [1,2,3,4,6,8]
field = extension: 7*x^2+8*x+2

entry = ext-tilde
group = ext
base = X431
map = pitilde
expect = [1,2,3,3,6,9]
field = extension: 5*x^3+12*x^2+12*x+4
note = same field as Q(x^3+12x-12)

)cat",
R"cat(entry = no114
group = s7
base = X321
map = piA
twist = all-starred * (s)
expect = [1,4,6,6,1*]
mw = Z/2
form = 12,0,12
sz = 114
construction = pull-back from X321 via pi_A *
defined_over = Q

entry = no115
group = s7
base = H[1,3,5,III]
expect = [1,5,5,6,1*]
mw = 0
form = 20,0,30
sz = 115
construction = double cover of [1,3,5,III] *
defined_over = Q
skip = missing-base-surface

entry = no116
group = s7
base = X321
pre = inf,1,0
map = piB
twist = all-starred * (6*s + t)
expect = [2,4,5,6,1*]
mw = Z/2
form = 12,0,20
sz = 116
construction = pull-back from X321 via pi_B *
defined_over = Q

entry = no117
group = s7
base = H[1,1,7,III]
expect = [1,2,7,7,1*]
mw = 0
form = 14,0,28
sz = 117
construction = double cover of [1,1,7,III] *
defined_over = Q(sqrt(-7))
skip = missing-base-surface

entry = no122
group = s7
base = X141n
pre = 0,inf,1
map = tri2
expect = [2,3,4,8,1*]
mw = Z/4
form = 6,0,8
sz = 122
construction = triple cover of X141
defined_over = Q

entry = no123
group = s7
base = X321
map = piC
twist = all-starred * (2*s - t)
expect = [2,2,5,8,1*]
mw = Z/2
form = 8,0,20
sz = 123
construction = pull-back from X321 via pi_C *
defined_over = Q

entry = no127
group = s7
base = H[1,3,5,III]
expect = [1,3,3,10,1*]
mw = 0
form = 6,0,60
sz = 127
construction = double cover of [1,3,5,III] *
defined_over = Q
skip = missing-base-surface

entry = no128
group = s7
base = X321
map = piB
twist = all-starred * (s - 4*t)
expect = [2,2,3,10,1*]
mw = Z/2
form = 2,0,60
sz = 128
construction = pull-back of X321 via pi_B *
defined_over = Q

entry = no129
group = s7
base = X321
pre = inf,1,0
map = piC
twist = all-starred * (s + (2*a + 1)*t)
field = extension: x^2+1
expect = [1,2,4,10,1*]
mw = Z/2
form = 8,4,12
sz = 129
construction = pull-back from X321 via pi_C *
defined_over = Q(sqrt(-1))

entry = no132
group = s7
base = X141n
pre = 1,inf,0
map = tri2
expect = [1,2,2,12,1*]
mw = Z/4
form = 2,0,6
sz = 132
construction = triple cover of X141
defined_over = Q

entry = no133
group = s7
base = X141n
pre = 0,inf,1
map = tri1
twist = s^2 + s*t + t^2
expect = [1,1,3,12,1*]
mw = Z/2
form = 6,0,6
sz = 133
construction = triple cover of X141
defined_over = Q

entry = no135
group = s7
base = H[1,1,7,III]
expect = [1,1,1,14,1*]
mw = 0
form = 6,2,10
sz = 135
construction = double cover of [1,1,7,III] *
defined_over = Q(sqrt(-7))
skip = missing-base-surface

entry = no138
group = s7
base = H[1,3,5,III]
expect = [3,3,5,5,2*]
mw = 0
form = 30,0,30
sz = 138
construction = double cover of [1,3,5,III] *
defined_over = Q
skip = missing-base-surface

entry = no139
group = s7
base = X222q
map = tri1
twist = s^2 + s*t + t^2
expect = [2,2,6,6,2*]
mw = Z/2xZ/2
form = 6,0,6
sz = 139
construction = triple cover of X222
defined_over = Q

entry = no140
group = s7
base = X222q
map = tri2
expect = [2,4,4,6,2*]
mw = Z/2xZ/2
form = 4,0,12
sz = 140
construction = triple cover of X222
defined_over = Q

entry = no141
group = s7
base = X321
pre = inf,1,0
map = piB
twist = all-starred * (s - 4*t)
expect = [1,4,5,6,2*]
mw = Z/2
form = 4,0,30
sz = 141
construction = pull-back from X321 via pi_B *
defined_over = Q

entry = no142
group = s7
base = H[1,1,7,III]
expect = [1,1,7,7,2*]
mw = 0
form = 14,0,14
sz = 142
construction = double cover of [1,1,7,III] *
defined_over = Q(sqrt(-7))
skip = missing-base-surface

entry = no144
group = s7
base = X321
pre = inf,1,0
map = piA
twist = all-starred * (s)
expect = [2,3,3,8,2*]
mw = Z/2
form = 6,0,24
sz = 144
construction = pull-back from X321 via pi_A *
defined_over = Q

entry = no145
group = s7
base = X141n
pre = 1,0,inf
map = tri2
twist = all-starred * (s)
expect = [1,3,4,8,2*]
mw = Z/2
form = 4,0,24
sz = 145
construction = triple cover of X141 *
defined_over = Q

entry = no146
group = s7
base = X321
map = piC
twist = all-starred * (s + (2*a + 1)*t)
field = extension: x^2+1
expect = [1,2,5,8,2*]
mw = Z/2
form = 6,2,14
sz = 146
construction = pull-back from X321 via pi_C *
defined_over = Q(sqrt(-1))

entry = no148a
group = s7
base = X321
map = piB
twist = all-starred * (2*s - 5*t)
expect = [1,2,3,10,2*]
mw = Z/2
form = 6,0,10
sz = 148
construction = pull-back from X321 via pi_B *
defined_over = Q

entry = no148b
group = s7
base = X321
map = piB
twist = all-starred * (6*s + t)
expect = [1,2,3,10,2*]
mw = Z/2
form = 4,2,16
sz = 148
construction = pull-back from X321 via pi_B *
defined_over = Q

entry = no149
group = s7
base = X321
pre = inf,1,0
map = piC
twist = all-starred * (2*s - t)
expect = [1,1,4,10,2*]
mw = Z/2
form = 4,0,10
sz = 149
construction = pull-back from X321 via pi_C *
defined_over = Q

entry = no151
group = s7
base = X141n
pre = 1,inf,0
map = tri2
twist = all-starred * (s)
expect = [1,1,2,12,2*]
mw = Z/2
form = 4,0,6
sz = 151
construction = triple cover of X141 *
defined_over = Q

entry = no156
group = s7
base = X141n
pre = 1,0,inf
map = tri1
expect = [3,4,4,4,3*]
mw = Z/4
form = 8,4,8
sz = 156
construction = triple cover of X141
defined_over = Q

entry = no157
group = s7
base = H[1,3,5,III]
expect = [2,3,5,5,3*]
mw = 0
form = 10,0,60
sz = 157
construction = double cover of [1,3,5,III] *
defined_over = Q
skip = missing-base-surface

entry = no161
group = s7
base = X321
pre = inf,1,0
map = piA2
twist = all-starred * (s)
expect = [2,2,3,8,3*]
mw = Z/2
form = 4,0,24
sz = 161
construction = pull-back from X321 via pi_Ap *
defined_over = Q

entry = no162
group = s7
base = X141n
map = tri2
expect = [1,2,4,8,3*]
mw = Z/4
form = 2,0,8
sz = 162
construction = triple cover of X141
defined_over = Q

entry = no163
group = s7
base = X321
map = piB
twist = all-starred * (s)
expect = [1,2,2,10,3*]
mw = Z/2
form = 4,0,10
sz = 163
construction = pull-back from X321 via pi_B *
defined_over = Q

entry = no164
group = s7
base = H[1,3,5,III]
expect = [1,1,3,10,3*]
mw = 0
form = 2,0,60
sz = 164
construction = double cover of [1,3,5,III] *
defined_over = Q
skip = missing-base-surface

)cat",
R"cat(entry = no166
group = s7
base = X141n
map = tri1
expect = [1,1,1,12,3*]
mw = Z/4
form = 2,1,2
sz = 166
construction = triple cover of X141
defined_over = Q

entry = no170
group = s7
base = H[2,3,4,III]
expect = [3,3,4,4,4*]
mw = Z/2
form = 12,0,12
sz = 170
construction = double cover of [2,3,4,III] *
defined_over = Q
skip = missing-base-surface

entry = no171
group = s7
base = X321
map = piA
twist = all-starred * (t)
expect = [1,1,6,6,4*]
mw = Z/2
form = 6,0,6
sz = 171
construction = pull-back from X321 via pi_A *
defined_over = Q

entry = no172
group = s7
base = X222q
pre = 0,inf,1
map = tri2
twist = all-starred * (s)
expect = [2,2,4,6,4*]
mw = Z/2xZ/2
form = 2,0,12
sz = 172
construction = triple cover of X222 *
defined_over = Q

entry = no173
group = s7
base = X321
pre = inf,1,0
map = piB
twist = all-starred * (2*s - 5*t)
expect = [1,2,5,6,4*]
mw = Z/2
form = 2,0,30
sz = 173
construction = pull-back from X321 via pi_B *
defined_over = Q

entry = no175
group = s7
base = X411n
pre = 0,inf,1
map = tri2
expect = [1,2,3,8,4*]
mw = Z/2
form = 2,0,24
sz = 175
construction = triple cover of X411
defined_over = Q

entry = no176
group = s7
base = X321
pre = inf,1,0
map = piC
twist = all-starred * (s)
expect = [1,1,2,10,4*]
mw = Z/2
form = 2,0,10
sz = 176
construction = pull-back from X321 via pi_C *
defined_over = Q

entry = no180
group = s7
base = H[1,3,5,III]
expect = [2,3,3,5,5*]
mw = 0
form = 12,0,30
sz = 180
construction = double cover of [1,3,5,III] *
defined_over = Q
skip = missing-base-surface

entry = no181
group = s7
base = X321
pre = inf,1,0
map = piB
twist = all-starred * (t)
expect = [1,2,4,6,5*]
mw = Z/2
form = 4,0,12
sz = 181
construction = pull-back from X321 via pi_B *
defined_over = Q

entry = no182
group = s7
base = H[1,3,5,III]
expect = [1,1,5,6,5*]
mw = 0
form = 4,0,30
sz = 182
construction = double cover of [1,3,5,III] *
defined_over = Q
skip = missing-base-surface

entry = no184
group = s7
base = X321
map = piC
twist = all-starred * (t)
expect = [1,2,2,8,5*]
mw = Z/2
form = 4,0,8
sz = 184
construction = pull-back from X321 via pi_C *
defined_over = Q

entry = no188
group = s7
base = X222q
pre = 0,inf,1
map = tri2
expect = [2,2,4,4,6*]
mw = Z/2xZ/2
form = 4,0,4
sz = 188
construction = triple cover of X222
defined_over = Q

entry = no189
group = s7
base = H[1,3,5,III]
expect = [1,1,5,5,6*]
mw = 0
form = 10,0,10
sz = 189
construction = double cover of [1,3,5,III] *
defined_over = Q
skip = missing-base-surface

entry = no190
group = s7
base = X321
pre = inf,1,0
map = piB
twist = all-starred * (s)
expect = [1,2,4,5,6*]
mw = Z/2
form = 2,0,20
sz = 190
construction = pull-back from X321 via pi_B *
defined_over = Q

entry = no191
group = s7
base = X222q
pre = 0,inf,1
map = tri1
expect = [2,2,2,6,6*]
mw = Z/2xZ/2
form = 4,2,4
sz = 191
construction = triple cover of X222
defined_over = Q

entry = no192
group = s7
base = X321
map = piA2
twist = all-starred * (s)
expect = [1,1,4,6,6*]
mw = Z/2
form = 2,0,12
sz = 192
construction = pull-back from X321 via pi_Ap *
defined_over = Q

entry = no201
group = s7
base = H[1,1,7,III]
expect = [1,1,2,7,7*]
mw = 0
form = 6,2,10
sz = 201
construction = double cover of [1,1,7,III] *
defined_over = Q(sqrt(-7))
skip = missing-base-surface

entry = no202
group = s7
base = X321
pre = inf,1,0
map = piA
twist = all-starred * (t)
expect = [2,2,3,3,8*]
mw = Z/2
form = 6,0,6
sz = 202
construction = pull-back from X321 via pi_A *
defined_over = Q

entry = no203
group = s7
base = X411n
pre = inf,0,1
map = tri2
twist = all-starred * (s)
expect = [1,2,3,4,8*]
mw = Z/2
form = 4,0,6
sz = 203
construction = triple cover of X411 *
defined_over = Q

entry = no204
group = s7
base = X321
map = piC
twist = all-starred * (s)
expect = [1,2,2,5,8*]
mw = Z/2
form = 2,0,4
sz = 204
construction = pull-back from X321 via pi_C *
defined_over = Q

entry = no210
group = s7
base = H[1,3,5,III]
expect = [1,1,3,3,10*]
mw = 0
form = 6,0,6
sz = 210
construction = double cover of [1,3,5,III] *
defined_over = Q
skip = missing-base-surface

entry = no211
group = s7
base = X321
map = piB
twist = all-starred * (t)
expect = [1,2,2,3,10*]
mw = Z/2
form = 2,0,6
sz = 211
construction = pull-back from X321 via pi_B *
defined_over = Q

entry = no212
group = s7
base = X321
pre = inf,1,0
map = piC
twist = all-starred * (t)
expect = [1,1,2,4,10*]
mw = Z/2
form = 2,0,4
sz = 212
construction = pull-back from X321 via pi_C *
defined_over = Q

entry = no215
group = s7
base = X411n
map = tri2
expect = [1,1,2,2,12*]
mw = Z/2
form = 2,0,2
sz = 215
construction = triple cover of X411
defined_over = Q

entry = no216
group = s7
base = X411n
map = tri1
expect = [1,1,1,3,12*]
mw = Z/2
form = 2,1,2
sz = 216
construction = triple cover of X411
defined_over = Q

entry = no218
group = s7
base = H[1,1,7,III]
expect = [1,1,1,1,14*]
mw = 0
form = 2,0,2
sz = 218
construction = double cover of [1,1,7,III] *
defined_over = Q
skip = missing-base-surface

entry = no223
group = s7
base = X431
pre = 1,inf,0
map = pi2
expect = [1,3,6,6,IV*]
mw = Z/3
form = 6,0,6
sz = 223
construction = pull-back from X431 via pi_2
defined_over = Q

entry = no224
group = s7
base = X431
pre = 1,0,inf
map = pi4
expect = [3,3,4,6,IV*]
mw = Z/3
form = 6,0,12
sz = 224
construction = pull-back from X431 via pi_4
defined_over = Q

entry = no233
group = s7
base = X431
map = pi3
expect = [1,3,3,9,IV*]
mw = Z/3
form = 6,3,6
sz = 233
construction = pull-back from X431 via pi_3
defined_over = Q

entry = no234
group = s7
base = X431
map = pi2
expect = [2,2,3,9,IV*]
mw = Z/3
form = 2,0,18
sz = 234
construction = pull-back from X431 via pi_2
defined_over = Q

)cat",
R"cat(entry = no241
group = s7
base = X431
pre = 1,inf,0
map = pi4
expect = [1,1,2,12,IV*]
mw = Z/3
form = 2,0,4
sz = 241
construction = pull-back from X431 via pi_4
defined_over = Q

entry = no259
group = s7
base = X321
map = piE
twist = s^2 - 3*s*t + t^2
expect = [2,4,4,5,III*]
mw = Z/2
form = 4,0,20
sz = 259
construction = pull-back from X321 via pi_E
defined_over = Q

entry = no261
group = s7
base = X321
map = piF
twist = 6*s^2 - 4*s*t - t^2
expect = [1,4,4,6,III*]
mw = Z/2
form = 4,0,12
sz = 261
construction = pull-back from X321 via pi_F
defined_over = Q

entry = no262
group = s7
base = X321
map = piG
twist = 4*s^2 - 7*s*t + 4*t^2
expect = [2,3,4,6,III*]
mw = Z/2
form = 6,0,12
sz = 262
construction = pull-back from X321 via pi_G
defined_over = Q

entry = no263
group = s7
base = X321
pre = inf,1,0
map = piH
twist = 3*s^2 - 10*s*t + 15*t^2
expect = [2,2,5,6,III*]
mw = Z/2
form = 8,2,8
sz = 263
construction = pull-back from X321 via pi_H
defined_over = Q

entry = no270
group = s7
base = X321
pre = inf,1,0
map = piF
twist = 6*s^2 - 4*s*t - t^2
expect = [2,2,3,8,III*]
mw = Z/2
form = 2,0,24
sz = 270
construction = pull-back from X321 via pi_F
defined_over = Q

entry = no271
group = s7
base = X321
map = piI
twist = s^2 + (a - 3)*s*t + (-4*a - 3)*t^2
field = extension: x^2+1
expect = [1,2,4,8,III*]
mw = Z/2
form = 4,0,8
sz = 271
construction = pull-back from X321 via pi_I
defined_over = Q(sqrt(-1))

entry = no275
group = s7
base = X321
pre = inf,1,0
map = piE
twist = s^2 - 3*s*t + t^2
expect = [1,2,2,10,III*]
mw = Z/2
form = 2,0,10
sz = 275
construction = pull-back from X321 via pi_E
defined_over = Q

entry = no276
group = s7
base = X321
map = piH
twist = 3*s^2 - 10*s*t + 15*t^2
expect = [1,1,3,10,III*]
mw = Z/2
form = 4,1,4
sz = 276
construction = pull-back from X321 via pi_H
defined_over = Q

entry = no298
group = s7
base = H[3,4,II,III]
expect = [3,3,4,4,II*]
mw = 0
form = 12,0,12
sz = 298
construction = double cover of [3,4,II,III] *
defined_over = Q
skip = missing-base-surface

entry = no299
group = s7
base = H[2,5,II,III]
expect = [2,2,5,5,II*]
mw = 0
form = 10,0,10
sz = 299
construction = double cover of [2,5,II,III] *
defined_over = Q
skip = missing-base-surface

entry = no301
group = s7
base = H[1,6,II,III]
expect = [1,1,6,6,II*]
mw = 0
form = 6,0,6
sz = 301
construction = double cover of [1,6,II,III] *
defined_over = Q
skip = missing-base-surface

entry = rat113
group = rat
expect = [5,5,1*,1*]
sz = 113
skip = metadata-only

entry = rat121
group = rat
expect = [2,8,1*,1*]
sz = 121
skip = metadata-only

entry = rat124
group = rat
expect = [1,9,1*,1*]
sz = 124
skip = metadata-only

entry = rat136
group = rat
expect = [2*,2*,2*]
sz = 136
skip = metadata-only

entry = rat137
group = rat
expect = [4,4,2*,2*]
sz = 137
skip = metadata-only

entry = rat153
group = rat
expect = [3,6,1*,2*]
sz = 153
skip = metadata-only

entry = rat154
group = rat
expect = [1,8,1*,2*]
sz = 154
skip = metadata-only

entry = rat155
group = rat
expect = [3,3,3*,3*]
sz = 155
skip = metadata-only

entry = rat167
group = rat
expect = [2,6,1*,3*]
sz = 167
skip = metadata-only

entry = rat168
group = rat
expect = [1,6,2*,3*]
sz = 168
skip = metadata-only

entry = rat169
group = rat
expect = [2,2,4*,4*]
sz = 169
skip = metadata-only

entry = rat177
group = rat
expect = [1*,1*,4*]
sz = 177
skip = metadata-only

entry = rat178
group = rat
expect = [2,4,2*,4*]
sz = 178
skip = metadata-only

entry = rat179
group = rat
expect = [1,1,5*,5*]
sz = 179
skip = metadata-only

entry = rat187
group = rat
expect = [1,5,1*,5*]
sz = 187
skip = metadata-only

entry = rat195
group = rat
expect = [2,3,1*,6*]
sz = 195
skip = metadata-only

entry = rat196
group = rat
expect = [1,3,2*,6*]
sz = 196
skip = metadata-only

entry = rat197
group = rat
expect = [1,2,3*,6*]
sz = 197
skip = metadata-only

)cat",
R"cat(entry = rat205
group = rat
expect = [1,2,1*,8*]
sz = 205
skip = metadata-only

entry = rat206
group = rat
expect = [1,1,2*,8*]
sz = 206
skip = metadata-only

entry = rat209
group = rat
expect = [1,1,1*,9*]
sz = 209
skip = metadata-only

entry = rat219
group = rat
expect = [IV*,IV*,IV*]
sz = 219
skip = metadata-only

entry = rat220
group = rat
expect = [4,4,IV*,IV*]
sz = 220
skip = metadata-only

entry = rat222
group = rat
expect = [2,4,IV*,IV*]
sz = 222
skip = metadata-only

entry = rat226
group = rat
expect = [1,7,IV*,IV*]
sz = 226
skip = metadata-only

entry = rat243
group = rat
expect = [4,5,1*,IV*]
sz = 243
skip = metadata-only

entry = rat244
group = rat
expect = [2,7,1*,IV*]
sz = 244
skip = metadata-only

entry = rat245
group = rat
expect = [1,8,1*,IV*]
sz = 245
skip = metadata-only

entry = rat246
group = rat
expect = [2*,IV*,IV*]
sz = 246
skip = metadata-only

entry = rat247
group = rat
expect = [3,5,2*,IV*]
sz = 247
skip = metadata-only

entry = rat248
group = rat
expect = [1,7,2*,IV*]
sz = 248
skip = metadata-only

entry = rat249
group = rat
expect = [2,5,3*,IV*]
sz = 249
note = printed as 2,5,3*.IV*
skip = metadata-only

entry = rat250
group = rat
expect = [1*,3*,IV*]
sz = 250
skip = metadata-only

entry = rat251
group = rat
expect = [1,5,4*,IV*]
sz = 251
skip = metadata-only

entry = rat252
group = rat
expect = [2,3,5*,IV*]
sz = 252
skip = metadata-only

entry = rat253
group = rat
expect = [1,4,5*,IV*]
sz = 253
skip = metadata-only

entry = rat254
group = rat
expect = [1,2,7*,IV*]
sz = 254
note = printed as 1,2,7,IV*
skip = metadata-only

entry = rat255
group = rat
expect = [1,1,8*,IV*]
sz = 255
skip = metadata-only

entry = rat256
group = rat
expect = [3,3,III*,III*]
sz = 256
skip = metadata-only

entry = rat257
group = rat
expect = [2,4,III*,III*]
sz = 257
skip = metadata-only

entry = rat258
group = rat
expect = [1,5,III*,III*]
sz = 258
skip = metadata-only

entry = rat279
group = rat
expect = [0*,III*,III*]
sz = 279
skip = metadata-only

entry = rat280
group = rat
expect = [3,5,1*,III*]
sz = 280
skip = metadata-only

entry = rat281
group = rat
expect = [2,6,1*,III*]
sz = 281
skip = metadata-only

entry = rat282
group = rat
expect = [1,7,1*,III*]
sz = 282
skip = metadata-only

entry = rat283
group = rat
expect = [3,4,2*,III*]
sz = 283
skip = metadata-only

entry = rat284
group = rat
expect = [1,6,2*,III*]
sz = 284
skip = metadata-only

entry = rat285
group = rat
expect = [1*,2*,III*]
sz = 285
skip = metadata-only

)cat",
R"cat(entry = rat286
group = rat
expect = [2,4,3*,III*]
sz = 286
skip = metadata-only

entry = rat287
group = rat
expect = [1,5,3*,III*]
sz = 287
skip = metadata-only

entry = rat288
group = rat
expect = [2,3,4*,III*]
sz = 288
skip = metadata-only

entry = rat289
group = rat
expect = [1,3,5*,III*]
sz = 289
skip = metadata-only

entry = rat290
group = rat
expect = [1,2,6*,III*]
sz = 290
skip = metadata-only

entry = rat291
group = rat
expect = [1,1,7*,III*]
sz = 291
skip = metadata-only

entry = rat292
group = rat
expect = [3,4,III*,IV*]
sz = 292
skip = metadata-only

entry = rat293
group = rat
expect = [2,5,III*,IV*]
sz = 293
skip = metadata-only

entry = rat294
group = rat
expect = [1,6,III*,IV*]
sz = 294
skip = metadata-only

entry = rat295
group = rat
expect = [1*,III*,IV*]
sz = 295
skip = metadata-only

entry = rat296
group = rat
expect = [2,2,II*,II*]
sz = 296
note = printed as 2,2 II*,II*
skip = metadata-only

entry = rat297
group = rat
expect = [IV,II*,II*]
sz = 297
skip = metadata-only

entry = rat313
group = rat
expect = [1*,1*,II*]
sz = 313
skip = metadata-only

entry = rat314
group = rat
expect = [2,5,1*,II*]
sz = 314
skip = metadata-only

entry = rat315
group = rat
expect = [1,6,1*,II*]
sz = 315
skip = metadata-only

entry = rat316
group = rat
expect = [3,3,2*,II*]
sz = 316
skip = metadata-only

entry = rat317
group = rat
expect = [1,5,2*,II*]
sz = 317
skip = metadata-only

entry = rat318
group = rat
expect = [2,3,3*,II*]
sz = 318
skip = metadata-only

entry = rat319
group = rat
expect = [1,2,5*,II*]
sz = 319
skip = metadata-only

entry = rat320
group = rat
expect = [1,1,6*,II*]
sz = 320
skip = metadata-only

entry = rat321
group = rat
expect = [2,4,II*,IV*]
sz = 321
skip = metadata-only

entry = rat322
group = rat
expect = [1,5,II*,IV*]
sz = 322
skip = metadata-only

entry = rat323
group = rat
expect = [0*,II*,IV*]
sz = 323
skip = metadata-only

entry = rat324
group = rat
expect = [2,3,II*,III*]
sz = 324
skip = metadata-only

entry = rat325
group = rat
expect = [1,4,II*,III*]
sz = 325
skip = metadata-only

)cat",
};
}  // namespace

std::string builtin_catalog_text() {
    std::string s;
    for (const char* c : kChunks) s += c;
    return s;
}

}  // namespace ellfib
