import numpy as np
exec(open('g_suite.py').read().split("for k,p in pts.items()")[0])
rng=np.random.default_rng(1)
for k in ['G2','G4','G5','G6','G7','G9','G10']:
    fn=globals()[k]; x0=np.array(pts[k],float); f0=fn(x0)[0]
    best=None
    if max(fn(x0)[1])<=-1e-11: best=x0
    scale=1e-9
    while best is None and scale<1e-3:
        for _ in range(20000):
            x=x0*(1+scale*rng.standard_normal(len(x0)))
            f,g=fn(x)
            if max(g)<=-1e-11 and abs(f-f0)<=1e-6*abs(f0):
                best=x;break
        scale*=3
    f,g=fn(best)
    print(k, repr(f), max(g)); print('   {' + ', '.join('%.17g'%v for v in best) + '}')
