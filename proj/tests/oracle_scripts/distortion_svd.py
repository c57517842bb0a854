# Distortion of C_{b_r} on weighted l^2 (a=2) by full numpy SVD. Usage: python3 distortion_svd.py N
# Output for N=256 (r, norm_fwd, norm_inv, distortion):
#   0.02 1.0619222738592011 1.0619222738592013 1.1276789157182965
#   0.05 1.1621894446531873 1.1621894446531869 1.3506843052632833
#   0.1  1.351692932719217  1.3516929327192162 1.8270737843630767
#   0.2  1.838291932542187  1.8382919325421863 3.379317229249687
# N=128 agrees to ~1e-8; N=512 is used in the truncation-stability check.
import numpy as np,sys
def mat(r,N,K):
    b=np.zeros(K);b[0]=-r;b[1:]=(1-r*r)*r**np.arange(K-1)
    c=np.zeros(K);c[0]=1;P={0:c.copy()}
    for n in range(1,N+1):
        c=np.convolve(c,b)[:K];P[n]=c.copy()
    M=np.zeros((2*K-1,2*N+1))
    for n in range(-N,N+1):
        col=P[abs(n)]
        if n>=0: M[K-1:,n+N]=col
        else: M[:K,n+N]=col[::-1]
    k=np.arange(-(K-1),K);w=np.maximum(1,np.abs(k)**2.0)
    n=np.arange(-N,N+1);wi=np.maximum(1,np.abs(n)**2.0)
    return (w[:,None]*M)/wi[None,:]
for N in [int(sys.argv[1])]:
  for r in [0.02,0.05,0.1,0.2]:
    K=int(N*(1+r)/(1-r))+200
    f=np.linalg.svd(mat(r,N,K),compute_uv=False)[0]
    g=np.linalg.svd(mat(-r,N,K),compute_uv=False)[0]
    print(N,r,f,g,f*g)
