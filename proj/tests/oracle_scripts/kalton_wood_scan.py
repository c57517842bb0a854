# l1 norms of the Fourier-permutation automorphisms of Z_n (numpy, brute force).
# Output (n, total, affine count, min non-standard l1 norm, non-standard with norm < 1.2):
#   3 6 6 None 0
#   4 24 8 1.7071067811865475 0
#   5 120 20 1.8944271909999157 0
#   6 720 12 1.3660254037844408 0
#   7 5040 42 2.0437... 0
import numpy as np, itertools, math
for n in [3,4,5,6,7]:
    F=np.exp(-2j*np.pi*np.outer(range(n),range(n))/n)/np.sqrt(n)
    aff=set()
    for a in range(n):
        if math.gcd(a,n)!=1: continue
        for k in range(n): aff.add(tuple((a*j+k)%n for j in range(n)))
    mn=None; bad=0; tot=0
    for s in itertools.permutations(range(n)):
        P=np.zeros((n,n));
        for j in range(n): P[s[j],j]=1
        T=F.conj().T@P@F
        nm=np.abs(T).sum(0).max(); tot+=1
        if s not in aff:
            mn=nm if mn is None else min(mn,nm)
            if nm<1.2: bad+=1
    print(n,tot,len(aff),mn,bad)
