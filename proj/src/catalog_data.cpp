#include "liemod/catalog.hpp"

namespace liemod::detail {

// Algebras are encoded in the .lie format; see catalog.hpp.

extern const std::vector<const char*> table_dim3 = {
R"(dim 3
id 3.d1
psi 1 2 -> 3 : 1
psi 1 3 -> 2 : 1
psi 2 3 -> 1 : 1
betti 0,0,0,0
note sl2
)",
R"(dim 3
id 3.d2
params p q
projective
psi 1 3 -> 1 : p
psi 2 3 -> 1 : 1
psi 2 3 -> 2 : q
avoid p
avoid q
avoid p + q
betti 0,1,1,0
point 1:-1 p=1 q=-1 betti 0,1,2,1
point 1:0 p=1 q=0 betti 1,2,1,0
point 0:0 p=0 q=0 betti 1,4,5,2
group S2(p,q)
note special row printed as d2(1:1); (1:1) has generic cohomology, the printed vector belongs to (1:-1)
)",
R"(dim 3
id 3.d3
psi 1 3 -> 1 : 1
psi 2 3 -> 2 : 1
betti 0,3,3,0
)",
};

extern const std::vector<const char*> table_dim4 = {
R"(dim 4
id 4.d1
psi 2 3 -> 4 : 1
psi 2 4 -> 3 : 1
psi 3 4 -> 2 : 1
betti 1,1,0,1,1
)",
R"(dim 4
id 4.d2
psi 1 3 -> 1 : 1
psi 2 4 -> 2 : 1
betti 0,0,0,0,0
)",
R"(dim 4
id 4.d3
params p q
projective
psi 1 4 -> 1 : p + q
psi 2 3 -> 1 : 1
psi 2 4 -> 2 : p
psi 3 4 -> 2 : 1
psi 3 4 -> 3 : q
avoid p
avoid q
avoid p + q
betti 0,1,1,0,0
point 1:0 p=1 q=0 betti 0,1,2,1,0
point 1:-1 p=1 q=-1 betti 1,2,2,2,1
point 0:0 p=0 q=0 betti 1,4,6,5,2
group S2(p,q)
)",
R"(dim 4
id 4.d4
psi 1 4 -> 1 : 2
psi 2 3 -> 1 : 1
psi 2 4 -> 2 : 1
psi 3 4 -> 3 : 1
betti 0,3,3,0,0
)",
R"(dim 4
id 4.d5
params p q r
projective
psi 1 4 -> 1 : p
psi 2 4 -> 1 : 1
psi 2 4 -> 2 : q
psi 3 4 -> 2 : 1
psi 3 4 -> 3 : r
avoid p
avoid q
avoid r
avoid p + q + r
avoid r - p - q
avoid q - p - r
avoid p - q - r
betti 0,2,2,0,0
point p:q:-p-q r=-p-q betti 0,2,2,1,1
point p:q:p+q r=p+q betti 0,2,3,1,0
point p:q:0 r=0 betti 1,3,3,1,0
point 1:-1:0 p=1 q=-1 r=0 betti 1,3,5,5,2
point 0:0:0 p=0 q=0 r=0 betti 1,4,6,5,2
group S3(p,q,r)
)",
R"(dim 4
id 4.d6
params p q
projective
psi 1 4 -> 1 : p
psi 2 4 -> 2 : p
psi 3 4 -> 2 : 1
psi 3 4 -> 3 : q
avoid p
avoid q
avoid 2p + q
avoid q - 2p
avoid p - q
betti 0,4,4,0,0
point 1:-2 p=1 q=-2 betti 0,4,4,1,1
point 1:2 p=1 q=2 betti 0,4,5,1,0
point 0:1 p=0 q=1 betti 2,6,6,2,0
point 1:0 p=1 q=0 betti 1,5,7,3,0
point 0:0 p=0 q=0 betti 2,8,13,10,3
)",
R"(dim 4
id 4.d7
psi 1 4 -> 1 : 1
psi 2 4 -> 2 : 1
psi 3 4 -> 3 : 1
betti 0,8,8,0,0
)",
};

extern const std::vector<const char*> table_dim5 = {
R"(dim 5
id 5.d1
psi 1 2 -> 1 : 1
psi 3 4 -> 4 : 2
psi 3 5 -> 5 : -2
psi 4 5 -> 3 : 1
betti 0,0,0,0,0,0
note sl2 on e3,e4,e5 plus the 2-dim nonabelian algebra on e1,e2
)",
R"(dim 5
id 5.d2
psi 1 3 -> 1 : -1
psi 1 5 -> 2 : 1
psi 2 3 -> 2 : 1
psi 2 4 -> 1 : 1
psi 3 4 -> 4 : 2
psi 3 5 -> 5 : -2
psi 4 5 -> 3 : 1
betti 0,1,0,0,1,0
note one printed form repeats psi12->1 from d1 and fails Jacobi; stored without it
)",
R"(dim 5
id 5.d3
psi 3 4 -> 4 : 2
psi 3 5 -> 5 : -2
psi 4 5 -> 3 : 1
betti 2,4,2,2,4,2
note sl2 plus a 2-dim abelian summand
)",
R"(dim 5
id 5.d4
psi 1 4 -> 1 : 1
psi 1 5 -> 1 : 1
psi 2 3 -> 1 : 1
psi 2 4 -> 2 : 1
psi 3 5 -> 3 : 1
betti 0,0,0,0,0,0
)",
R"(dim 5
id 5.d5
params p q r
projective
psi 1 5 -> 1 : (q - r)p
psi 2 4 -> 1 : 1
psi 2 4 -> 2 : p
psi 2 5 -> 1 : r - q
psi 3 4 -> 2 : 1
psi 3 4 -> 3 : q
psi 3 5 -> 1 : 1
psi 3 5 -> 2 : r
psi 3 5 -> 3 : -r(p - q)
avoid p
avoid q
avoid r
avoid p - q
avoid p - r
avoid q - r
avoid p r - q^2
betti 0,1,2,1,0,0
point 3:-3:-1 p=3 q=-3 r=-1 betti 0,1,2,3,4,2
point p:q:q r=q betti 1,3,3,1,0,0
point 1:0:0 p=1 q=0 r=0 betti 1,5,9,7,2,0
point 0:0:0 p=0 q=0 r=0 betti 1,6,13,15,10,3
group sigma-tau
note special point printed as (3:-3:1); its vector occurs at (3:-3:-1)
)",
R"(dim 5
id 5.d6
params p q
projective
psi 1 5 -> 1 : -p
psi 2 4 -> 1 : 1
psi 2 4 -> 2 : p
psi 2 5 -> 1 : 1
psi 3 4 -> 2 : 1
psi 3 4 -> 3 : q
psi 3 5 -> 2 : 1
psi 3 5 -> 3 : q - p
avoid p
avoid q
avoid p - q
betti 0,1,2,1,0,0
point 0:1 p=0 q=1 betti 2,7,10,7,2,0
point 1:0 p=1 q=0 betti 0,1,2,1,0,0
point 0:0 p=0 q=0 betti 2,8,14,15,10,3
group sigma-tau
)",
R"(dim 5
id 5.d7
psi 2 4 -> 1 : 1
psi 2 4 -> 2 : 1
psi 3 4 -> 2 : 1
psi 3 4 -> 3 : 2
psi 3 5 -> 1 : 1
psi 3 5 -> 2 : 2
psi 3 5 -> 3 : 2
psi 4 5 -> 3 : 1
betti 1,2,2,1,0,0
)",
R"(dim 5
id 5.d8
psi 1 4 -> 1 : 1
psi 2 4 -> 2 : 1
psi 3 5 -> 3 : 1
betti 0,3,6,3,0,0
)",
R"(dim 5
id 5.d9
params p q
projective
psi 1 5 -> 1 : 2p + q
psi 2 3 -> 1 : 1
psi 2 5 -> 2 : p + q
psi 3 4 -> 2 : 1
psi 3 5 -> 3 : p
psi 3 5 -> 4 : 1
psi 4 5 -> 1 : 1
psi 4 5 -> 4 : q
avoid p
avoid q
avoid p + q
avoid 2p + 3q
avoid 3p + 2q
avoid 4p + q
avoid 4p + 3q
betti 0,1,1,0,0,0
point 1:0 p=1 q=0 betti 0,1,2,1,0,0
point 0:1 p=0 q=1 betti 0,1,3,2,0,0
point 1:-1 p=1 q=-1 betti 0,1,2,1,0,0
point 3:-2 p=3 q=-2 betti 0,1,1,1,1,0
point 2:-3 p=2 q=-3 betti 0,1,1,1,1,0
point 1:-4 p=1 q=-4 betti 0,1,1,1,1,0
point 3:-4 p=3 q=-4 betti 0,1,1,0,1,1
point 0:0 p=0 q=0 betti 1,4,7,8,6,2
note (0:0) is also printed as 0,1,4,7,8,6,2; the leading 0 is spurious
)",
R"(dim 5
id 5.d10
psi 1 5 -> 1 : 3
psi 2 3 -> 1 : 1
psi 2 5 -> 2 : 2
psi 3 4 -> 2 : 1
psi 3 5 -> 3 : 1
psi 4 5 -> 1 : 1
psi 4 5 -> 4 : 1
betti 0,2,2,0,0,0
)",
R"(dim 5
id 5.d11
psi 1 5 -> 1 : 1
psi 2 3 -> 1 : 1
psi 2 5 -> 2 : 1
psi 3 4 -> 2 : 1
psi 3 5 -> 4 : 1
psi 4 5 -> 4 : 1
betti 0,2,4,2,0,0
)",
R"(dim 5
id 5.d12
params p q r
projective
psi 1 5 -> 1 : p
psi 1 5 -> 2 : 1
psi 2 5 -> 2 : q + r
psi 3 4 -> 2 : 1
psi 3 5 -> 1 : 1
psi 3 5 -> 3 : q
psi 4 5 -> 3 : 1
psi 4 5 -> 4 : r
betti 0,2,2,0,0,0
point 0:0:0 p=0 q=0 r=0 betti 1,4,7,8,6,2
group S2(q,r)
)",
R"(dim 5
id 5.d13
params p q
projective
psi 1 5 -> 1 : p + q
psi 2 5 -> 2 : p + q
psi 3 4 -> 2 : 1
psi 3 5 -> 1 : 1
psi 3 5 -> 3 : p
psi 4 5 -> 3 : 1
psi 4 5 -> 4 : q
betti 0,3,3,0,0,0
point 0:0 p=0 q=0 betti 2,7,9,9,7,2
note (0:0) vector taken from the nilpotent table
)",
R"(dim 5
id 5.d14
params p q
projective
psi 1 5 -> 1 : p
psi 1 5 -> 2 : 1
psi 2 5 -> 2 : p + q
psi 3 4 -> 2 : 1
psi 3 5 -> 1 : 1
psi 3 5 -> 3 : q
psi 3 5 -> 4 : 1
psi 4 5 -> 4 : p
betti 0,3,3,0,0,0
point 0:0 p=0 q=0 betti 1,6,13,15,10,3
note the alternate printed form (psi15->2 with coefficient p+q, no psi25->2) fails Jacobi
)",
R"(dim 5
id 5.d15
params p q
projective
psi 1 5 -> 1 : p
psi 1 5 -> 2 : 1
psi 2 5 -> 2 : 2q
psi 3 4 -> 2 : 1
psi 3 5 -> 1 : 1
psi 3 5 -> 3 : q
psi 4 5 -> 4 : q
betti 0,4,4,0,0,0
point 0:0 p=0 q=0 betti 1,6,13,15,10,3
)",
R"(dim 5
id 5.d16
psi 1 5 -> 1 : 2
psi 2 5 -> 2 : 2
psi 3 4 -> 2 : 1
psi 3 5 -> 1 : 1
psi 3 5 -> 3 : 1
psi 4 5 -> 4 : 1
betti 0,5,5,0,0,0
)",
R"(dim 5
id 5.d17
psi 1 5 -> 1 : 1
psi 1 5 -> 2 : 1
psi 2 5 -> 2 : 2
psi 3 4 -> 2 : 1
psi 3 5 -> 3 : 1
psi 4 5 -> 4 : 1
betti 0,6,6,0,0,0
note also printed with h2=8; computed 6
)",
R"(dim 5
id 5.d18
psi 1 5 -> 1 : 1
psi 2 5 -> 2 : 1
psi 3 4 -> 2 : 1
psi 3 5 -> 1 : 1
psi 3 5 -> 4 : 1
psi 4 5 -> 4 : 1
betti 0,4,8,4,0,0
)",
R"(dim 5
id 5.d19
psi 1 5 -> 2 : 1
psi 3 4 -> 2 : 1
betti 1,11,20,21,15,4
)",
R"(dim 5
id 5.d20
params p q r s
projective
psi 1 5 -> 1 : p
psi 2 5 -> 1 : 1
psi 2 5 -> 2 : q
psi 3 5 -> 2 : 1
psi 3 5 -> 3 : r
psi 4 5 -> 3 : 1
psi 4 5 -> 4 : s
betti 0,3,3,0,0,0
point 0:0:0:0 p=0 q=0 r=0 s=0 betti 1,5,8,8,6,2
group S4(p,q,r,s)
)",
R"(dim 5
id 5.d21
params p q r
projective
psi 1 5 -> 1 : p
psi 2 5 -> 2 : p
psi 3 5 -> 2 : 1
psi 3 5 -> 3 : q
psi 4 5 -> 3 : 1
psi 4 5 -> 4 : r
betti 0,5,5,0,0,0
point 0:0:0 p=0 q=0 r=0 betti 2,8,14,15,10,3
group S2(q,r)
)",
R"(dim 5
id 5.d22
params p q
projective
psi 1 5 -> 1 : p
psi 2 5 -> 1 : 1
psi 2 5 -> 2 : q
psi 3 5 -> 3 : p
psi 4 5 -> 3 : 1
psi 4 5 -> 4 : q
betti 0,7,7,0,0,0
point 0:0 p=0 q=0 betti 2,10,19,20,12,3
)",
R"(dim 5
id 5.d23
params p q
projective
psi 1 5 -> 1 : p
psi 2 5 -> 2 : p
psi 3 5 -> 3 : p
psi 4 5 -> 3 : 1
psi 4 5 -> 4 : q
betti 0,9,9,0,0,0
point 0:0 p=0 q=0 betti 3,14,28,13,17,4
note (0:0) vector as printed in the nilpotent table; its alternating sum is 17, so it cannot be right
)",
R"(dim 5
id 5.d24
psi 1 5 -> 1 : 1
psi 2 5 -> 2 : 1
psi 3 5 -> 3 : 1
psi 4 5 -> 4 : 1
betti 0,15,15,0,0,0
)",
};

extern const std::vector<const char*> table_nilpotent = {
R"(dim 5
id nil.n1
psi 2 4 -> 1 : 1
psi 3 4 -> 2 : 1
psi 3 5 -> 1 : 1
betti 1,6,13,15,10,3
note d5(0:0:0)
)",
R"(dim 5
id nil.n2
psi 3 5 -> 2 : 1
psi 4 5 -> 3 : 1
betti 2,8,14,15,10,3
note d21(0:0:0); the second term is printed without its psi
)",
R"(dim 5
id nil.n3
psi 1 5 -> 2 : 1
psi 3 4 -> 2 : 1
psi 3 5 -> 1 : 1
psi 4 5 -> 3 : 1
betti 1,4,7,8,6,2
note d12(0:0:0)
)",
R"(dim 5
id nil.n4
psi 3 4 -> 2 : 1
psi 3 5 -> 1 : 1
psi 4 5 -> 3 : 1
betti 2,7,9,9,7,2
note d13(0:0)
)",
R"(dim 5
id nil.n5
psi 1 5 -> 2 : 1
psi 3 4 -> 2 : 1
betti 1,11,20,21,15,4
note d19
)",
R"(dim 5
id nil.n6
psi 2 5 -> 1 : 1
psi 3 5 -> 2 : 1
psi 4 5 -> 3 : 1
betti 1,5,8,8,6,2
note d20(0:0:0:0)
)",
R"(dim 5
id nil.n7
psi 2 5 -> 1 : 1
psi 4 5 -> 3 : 1
betti 2,10,19,20,12,3
note d22(0:0)
)",
R"(dim 5
id nil.n8
psi 4 5 -> 3 : 1
betti 3,14,28,13,17,4
note d23(0:0); printed vector has alternating sum 17, recomputed h3 is 30
)",
};

extern const std::vector<const char*> table_quarantine = {
R"(dim 5
id 5.d2-table
psi 1 2 -> 1 : 1
psi 1 3 -> 1 : -1
psi 1 5 -> 2 : 1
psi 2 3 -> 2 : 1
psi 2 4 -> 1 : 1
psi 3 4 -> 4 : 2
psi 3 5 -> 5 : -2
psi 4 5 -> 3 : 1
betti 0,1,0,0,1,0
note first printed form; fails Jacobi
)",
R"(dim 5
id 5.d2-prose
psi 1 3 -> 1 : -1
psi 1 5 -> 2 : 1
psi 2 3 -> 2 : 1
psi 2 4 -> 1 : 1
psi 3 4 -> 4 : 2
psi 3 5 -> 3 : -2
psi 4 5 -> 3 : 1
note second printed form, with -2psi35->3; fails Jacobi
)",
R"(dim 5
id 5.d3-prose
psi 3 4 -> 4 : 2
psi 3 4 -> 5 : 1
psi 3 5 -> 5 : -2
note printed form read with '+' for the missing operator; satisfies Jacobi but is solvable, not sl2 plus C^2
)",
R"(dim 5
id 5.d14-prose
params p q
projective
psi 1 5 -> 1 : p
psi 1 5 -> 2 : p + q
psi 3 4 -> 2 : 1
psi 3 5 -> 1 : 1
psi 3 5 -> 3 : q
psi 3 5 -> 4 : 1
psi 4 5 -> 4 : p
note alternate printed form; fails Jacobi
)",
};

} // namespace liemod::detail
