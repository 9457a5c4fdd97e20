#pragma once

namespace pencilstab {

/// Transcribed normal-form catalog (see normal_forms.hpp for the format).
inline const char* catalog_fixture_text() {
    return R"CAT(case Thm3.1-case1 not-stable
F: x4z2 x4yz x4y2 x5z x5y x6
G0: 
RM: 
PAT: strict 1
DIR: iff

case Thm3.1-case2 not-stable
F: x3z3 x3yz2 x3y2z x3y3 x4z2 x4yz x4y2 x5z x5y x6
G0: z6 yz5 y2z4 y3z3 y4z2 y5z y6
RM: 
PAT: strict 1
DIR: iff

case Thm3.1-case3 not-stable
F: x2z4 x2yz3 x2y2z2 x2y3z x2y4 x3z3 x3yz2 x3y2z x3y3 x4z2 x4yz x4y2 x5z x5y x6
G0: z6 yz5 y2z4 y3z3 y4z2 y5z y6 xz5 xyz4 xy2z3 xy3z2 xy4z xy5
RM: 
PAT: strict 1
DIR: iff

case Thm3.4-a1 not-stable
F: x3z3! x3yz2 x3y2z x3y3 x4z2 x4yz x4y2 x5z x5y x6
G0: z6 yz5 y2z4 y3z3 y4z2 y5z xz5 xyz4 xy2z3 xy3z2 x2z4 x2yz3
RM: 
PAT: strict 4
DIR: iff

case Thm3.4-a2 not-stable
F: x3z3! x3yz2 x3y2z x3y3 x4z2 x4yz x4y2 x5z x5y x6
G0: z6 yz5 y2z4 y3z3 y4z2 xz5 xyz4 xy2z3 xy3z2 x2z4 x2yz3 x2y2z2 x3yz2 x4z2
RM: 
PAT: strict 7
DIR: iff

case Thm3.4-b1 not-stable
F: x3yz2! x3y2z x3y3 x4z2 x4yz x4y2 x5z x5y x6
G0: z6 yz5 y2z4 y3z3 y4z2 y5z xz5 xyz4 xy2z3
RM: 
PAT: strict 3
DIR: iff

case Thm3.4-b2 not-stable
F: x3yz2! x3y2z x3y3 x4z2 x4yz x4y2 x5z x5y x6
G0: z6 yz5 y2z4 y3z3 y4z2 xz5 xyz4 xy2z3 x2z4
RM: 
PAT: strict 4
DIR: iff

case Thm3.4-b3 not-stable
F: x3yz2! x3y2z x3y3 x4z2 x4yz x4y2 x5z x5y x6
G0: z6 yz5 y2z4 y3z3 xz5 xyz4 xy2z3 x2z4 x2yz3 x3z3
RM: 
PAT: strict 7
DIR: iff

case Thm3.4-c1 not-stable
F: x3y2z! x3y3 x4z2 x4yz x4y2 x5z x5y x6
G0: z6 yz5 y2z4 y3z3 xz5 xyz4
RM: 
PAT: strict 4
DIR: iff

case Thm3.4-c2 not-stable
F: x3y2z! x3y3 x4z2 x4yz x4y2 x5z x5y x6
G0: z6 yz5 y2z4 xz5 xyz4 x2z4
RM: 0,3,4,0 1,2,4,0 2,1,4,0 3,0,4,0
PAT: strict 4
DIR: iff

case Thm3.4-d1 not-stable
F: x3y3! x4z2 x4yz x4y2 x5z x5y x6
G0: z6 yz5 y2z4 y3z3 xz5
RM: 
PAT: strict 3
DIR: iff

case Thm3.4-d2 not-stable
F: x3y3! x4z2 x4yz x4y2 x5z x5y x6
G0: z6 yz5 y2z4 xz5
RM: 0,3,4,0 1,1,4,0
PAT: strict 3
DIR: iff

case Thm3.4-d3 not-stable
F: x3y3! x4z2 x4yz x4y2 x5z x5y x6
G0: z6 yz5 xz5
RM: 0,2,4,0 0,2,4,1 0,2,5,0 0,3,4,0 1,1,4,0 1,1,4,1 1,1,5,0 2,0,4,0 2,1,4,0 3,0,4,0
PAT: strict 3
DIR: iff

case Thm3.5-a not-stable
F: x2z4! x2yz3 x2y2z2 x2y3z x2y4 x3z3 x3yz2 x3y2z x3y3 x4z2 x4yz x4y2 x5z x5y x6
G0: z6 yz5 y2z4 y3z3 y4z2 y5z xz5 xyz4 xy2z3 xy3z2 xy4z x2z4 x2yz3 x2y2z2 x2y3z x3z3 x3yz2 x3y2z x4z2 x4yz x5z
RM: 
PAT: strict 7
DIR: iff

case Thm3.5-b1 not-stable
F: x2yz3! x2y2z2 x2y3z x2y4 x3z3 x3yz2 x3y2z x3y3 x4z2 x4yz x4y2 x5z x5y x6
G0: z6 yz5 y2z4 y3z3 y4z2 y5z xz5 xyz4 xy2z3 xy3z2 xy4z x2z4 x2yz3 x2y2z2 x3z3 x3yz2
RM: 
PAT: strict 5
DIR: iff

case Thm3.5-b2 not-stable
F: x2yz3! x2y2z2 x2y3z x2y4 x3z3 x3yz2 x3y2z x3y3 x4z2 x4yz x4y2 x5z x5y x6
G0: z6 yz5 y2z4 y3z3 y4z2 xz5 xyz4 xy2z3 xy3z2 x2z4 x2yz3 x2y2z2 x3z3 x3yz2 x4z2
RM: 
PAT: strict 7
DIR: iff

case Thm3.5-c1 not-stable
F: x2y2z2! x2y3z x2y4 x3z3 x3yz2 x3y2z x3y3 x4z2 x4yz x4y2 x5z x5y x6
G0: z6 yz5 y2z4 y3z3 y4z2 y5z xz5 xyz4 xy2z3 xy3z2 x2z4 x2yz3
RM: 
PAT: strict 4
DIR: iff

case Thm3.5-c2 not-stable
F: x2y2z2! x2y3z x2y4 x3yz2 x3y2z x3y3 x4z2 x4yz x4y2 x5z x5y x6
G0: z6 yz5 y2z4 y3z3 y4z2 xz5 xyz4 xy2z3 xy3z2 x2z4 x2yz3 x2y2z2 x3z3
RM: 
PAT: strict 5
DIR: iff

case Thm3.5-c3 not-stable
F: x2y2z2! x2y3z x2y4 x3z3 x3yz2 x3y2z x3y3 x4z2 x4yz x4y2 x5z x5y x6
G0: z6 yz5 y2z4 y3z3 xz5 xyz4 xy2z3 x2z4 x2yz3 x2y2z2 x3z3
RM: 0,4,3,0 1,3,3,0 3,0,3,1 3,0,4,0
PAT: strict 7
DIR: iff

case Thm3.5-d1 not-stable
F: x2y3z! x2y4 x3z3 x3yz2 x3y2z x3y3 x4z2 x4yz x4y2 x5z x5y x6
G0: z6 yz5 y2z4 y3z3 y4z2 xz5 xyz4 xy2z3 x2z4
RM: 0,5,3,0 1,3,3,0 2,1,3,0
PAT: strict 4
DIR: iff

case Thm3.5-d2 not-stable
F: x2y3z! x2y4 x3z3 x3yz2 x3y2z x3y3 x4z2 x4yz x4y2 x5z x5y x6
G0: z6 yz5 y2z4 y3z3 xz5 xyz4 xy2z3 x2z4
RM: 0,4,3,0 0,4,3,1 0,5,3,0 1,3,3,0 2,1,3,0 2,1,3,1 2,2,3,0
PAT: strict 4
DIR: iff

case Thm3.5-d3 not-stable
F: x2y3z! x2y4 x3z3 x3yz2 x3y2z x3y3 x4z2 x4yz x4y2 x5z x5y x6
G0: z6 yz5 y2z4 xz5 xyz4 x2z4
RM: 0,3,3,0 0,3,3,1 0,3,4,0 0,4,3,0 1,2,3,0 1,2,3,1 1,2,4,0 1,3,3,0 2,1,3,0 2,1,3,1 2,1,4,0 2,2,3,0 3,0,3,1 3,0,4,0
PAT: strict 7
DIR: iff

case Thm3.5-e1 not-stable
F: x2y4! x3z3 x3yz2 x3y2z x3y3 x4z2 x4yz x4y2 x5z x5y x6
G0: z6 yz5 y2z4 y3z3 y4z2 y5z xz5 xyz4 xy2z3
RM: 0,6,3,0 1,3,3,0 2,0,3,0
PAT: strict 2
DIR: iff

case Thm3.5-e2 not-stable
F: x2y4! x3z3 x3yz2 x3y2z x3y3 x4z2 x4yz x4y2 x5z x5y x6
G0: z6 yz5 y2z4 y3z3 xz5 xyz4
RM: 0,4,3,0 0,4,3,1 0,5,3,0 1,2,3,0 1,2,3,1 1,3,3,0 2,0,3,0 2,0,3,1 2,1,3,0
PAT: strict 4
DIR: iff

case Thm3.5-e3 not-stable
F: x2y4! x3z3 x3yz2 x3y2z x3y3 x4z2 x4yz x4y2 x5z x5y x6
G0: z6 yz5 y2z4 xz5 xyz4
RM: 0,3,3,0 0,3,3,1 0,3,3,2 0,3,4,0 0,4,3,0 0,4,3,1 0,5,3,0 1,2,3,0 1,2,3,1 1,2,4,0 1,3,3,0 2,0,3,0 2,0,3,1 2,0,3,2 2,1,3,0 2,1,3,1 2,2,3,0
PAT: strict 4
DIR: iff

case Thm3.5-e4 not-stable
F: x2y4! x3z3 x3yz2 x3y2z x3y3 x4z2 x4yz x4y2 x5z x5y x6
G0: z6 yz5 xz5
RM: 0,2,3,0 0,2,3,1 0,2,3,2 0,2,4,0 0,2,4,1 0,2,5,0 0,3,3,0 0,3,3,1 0,3,4,0 0,4,3,0 1,1,3,0 1,1,3,1 1,1,3,2 1,1,4,0 1,1,4,1 1,1,5,0 1,2,3,0 1,2,3,1 1,2,4,0 1,3,3,0 2,0,3,0 2,0,3,1 2,0,3,2 2,0,4,0 2,0,4,1 2,0,5,0 2,1,3,0 2,1,3,1 2,1,4,0 2,2,3,0 3,0,3,1 3,0,4,0
PAT: strict 7
DIR: iff

case Thm3.6-case1 unstable
F: x5z x5y x6
G0: 
RM: 
PAT: nonstrict 1
DIR: iff

case Thm3.6-case2 unstable
F: x4y2 x5z x5y x6
G0: z6 yz5 y2z4
RM: 
PAT: nonstrict 1
DIR: iff

case Thm3.6-case3 unstable
F: x4yz x4y2 x5z x5y x6
G0: z6 yz5 y2z4 y3z3
RM: 
PAT: nonstrict 1
DIR: iff

case Thm3.6-case4 unstable
F: x4z2 x4yz x4y2 x5z x5y x6
G0: z6 yz5 y2z4 y3z3 y4z2
RM: 
PAT: nonstrict 1
DIR: iff

case Thm3.6-case5 unstable
F: x3y3 x4z2 x4yz x4y2 x5z x5y x6
G0: z6 yz5 y2z4 y3z3 y4z2 y5z xz5 xyz4
RM: 
PAT: nonstrict 1
DIR: iff

case Thm3.6-case6 unstable
F: x3y2z x3y3 x4z2 x4yz x4y2 x5z x5y x6
G0: z6 yz5 y2z4 y3z3 y4z2 y5z y6 xz5 xyz4 xy2z3
RM: 
PAT: nonstrict 1
DIR: iff

case Thm3.6-case7 unstable
F: x3yz2 x3y2z x3y3 x4z2 x4yz x4y2 x5z x5y x6
G0: z6 yz5 y2z4 y3z3 y4z2 y5z y6 xz5 xyz4 xy2z3 xy3z2
RM: 
PAT: nonstrict 1
DIR: iff

case Thm3.6-case8 unstable
F: x3z3 x3yz2 x3y2z x3y3 x4z2 x4yz x4y2 x5z x5y x6
G0: z6 yz5 y2z4 y3z3 y4z2 y5z y6 xz5 xyz4 xy2z3 xy3z2 xy4z xy5
RM: 
PAT: nonstrict 1
DIR: iff

case Thm3.6-case9 unstable
F: x2y4 x3z3 x3yz2 x3y2z x3y3 x4z2 x4yz x4y2 x5z x5y x6
G0: z6 yz5 y2z4 y3z3 y4z2 y5z y6 xz5 xyz4 xy2z3 xy3z2 xy4z x2z4
RM: 
PAT: nonstrict 1
DIR: iff

case Thm3.7-a1 unstable
F: x4z2! x4yz x4y2 x5z x5y x6
G0: z6 yz5 y2z4 y3z3 y4z2
RM: 
PAT: nonstrict 1
DIR: iff

case Thm3.7-a2 unstable
F: x4z2! x4yz x4y2 x5z x5y x6
G0: z6 yz5 y2z4 y3z3 xz5 xyz4 xy2z3 x2z4
RM: 
PAT: nonstrict 1
DIR: iff

case Thm3.7-b unstable
F: x4yz! x4y2 x5z x5y x6
G0: z6 yz5 y2z4 y3z3
RM: 
PAT: nonstrict 1
DIR: iff

case Thm3.7-c unstable
F: x4y2! x5z x5y x6
G0: z6 yz5 y2z4
RM: 
PAT: nonstrict 1
DIR: iff

case Thm3.8-a unstable
F: x3z3! x3yz2 x3y2z x3y3 x4z2 x4yz x4y2 x5z x5y x6
G0: z6 yz5 y2z4 y3z3 y4z2 y5z xz5 xyz4 xy2z3 xy3z2 xy4z x2z4 x2yz3 x2y2z2
RM: 
PAT: nonstrict 4
DIR: iff

case Thm3.8-b unstable
F: x3yz2! x3y2z x3y3 x4z2 x4yz x4y2 x5z x5y x6
G0: z6 yz5 y2z4 y3z3 y4z2 xz5 xyz4 xy2z3 xy3z2 x2z4 x2yz3
RM: 
PAT: nonstrict 4
DIR: iff

case Thm3.8-c unstable
F: x3y2z! x3y3 x4z2 x4yz x4y2 x5z x5y x6
G0: z6 yz5 y2z4 y3z3 y4z2 xz5 xyz4 xy2z3
RM: 
PAT: nonstrict 3
DIR: iff

case Thm3.8-d unstable
F: x3y2z! x3y3 x4yz x4y2 x5z x5y x6
G0: z6 yz5 y2z4 y3z3 xz5 xyz4 xy2z3 x2z4
RM: 
PAT: nonstrict 4
DIR: iff

case Thm3.8-e unstable
F: x3y3! x4z2 x4yz x4y2 x5z x5y x6
G0: z6 yz5 y2z4 y3z3 y4z2 xz5 xyz4
RM: 
PAT: nonstrict 2
DIR: iff

case Thm3.8-f unstable
F: x3y3! x4yz x4y2 x5z x5y x6
G0: z6 yz5 y2z4 xz5 xyz4
RM: 
PAT: nonstrict 4
DIR: iff

case Thm3.9 unstable
F: x2z4 x2yz3 x2y2z2 x2y3z x2y4 x3z3 x3yz2 x3y2z x3y3 x4z2 x4yz x4y2 x5z x5y x6
G0: z6 yz5 y2z4 xz5 xyz4 x2z4
RM: 
PAT: nonstrict 1
DIR: necessary
)CAT";
}

}  // namespace pencilstab
