"""Reference values frozen in oracles.hpp, recomputed with mpmath at 30 digits.

Run: python3 oracle_values.py
"""
from mpmath import mp, mpf, quad, exp, sqrt, pi, cos, sin, erfc, inf, ncdf, npdf, log
mp.dps=30
def I(t,x,y,g):
    f=lambda s: exp(-s*s*t/2)/(s*s+g*g)*(s*cos(s*x)-g*sin(s*x))*(s*cos(s*y)-g*sin(s*y))
    return quad(f,[0,1,2,4,8,16,32,64,inf],maxdegree=10)
def pref(t,x,y,g): return 1+exp(g*(x+y)-g*g*t/2)/(pi*g)*I(t,x,y,g)
# image closed form for reflected BM drift -g (Lebesgue)
def phat_img(t,x,y,g):
    st=sqrt(t)
    a=npdf(y-x+g*t,0,st)
    b=exp(-2*g*y)*npdf(y+x-g*t,0,st)
    c=2*g*exp(-2*g*y)*(1-ncdf((y+x-g*t)/st))
    return a+b+c
def pimg(t,x,y,g): return phat_img(t,x,y,g)/(2*g*exp(-2*g*y))
def kill(t,x,y,g): return exp(-g*g*t/2+g*(x+y))/(g*sqrt(8*pi*t))*(exp(-(x-y)**2/(2*t))-exp(-(x+y)**2/(2*t)))
print("I(1,0,0,1)", I(1,0,0,1), sqrt(pi/2)-pi/2*exp(0.5)*erfc(1/sqrt(2)))
for (t,x,y,g) in [(1,0,0,1),(1,1,1,1),(0.1,0.5,1,2),(10,3,0,0.5),(1,2,3,1),(0.3,0,1.5,1)]:
    print("prefl",t,x,y,g, pref(t,x,y,g), pimg(t,x,y,g))
print("kill", kill(1,1,1,1), exp(1.5)*(1-exp(-2))/sqrt(8*pi))
print("hit(1,1,1)", (pref(1,1,1,1)-kill(1,1,1,1))/2)
print("q", (2*pi)**-0.5*exp(1.5))
print("1/phi(1)^2, 1/psi(1)^2", 1/(2*exp(-2)), 2*pi*exp(2))
# normalization oracle of reflected
print("norm refl", quad(lambda u: pimg(1,1,u,1)*2*exp(-2*u),[0,1,2,5,inf]))
print("fp", 1/sqrt(2*pi))
