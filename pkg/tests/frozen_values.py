"""Frozen reference values used across the test suite.

Every constant was computed offline with arbitrary-precision arithmetic
(mpmath at 40 significant digits) before the package code existed, then
frozen here as double-precision literals. The generating recipe for each
block is recorded in the comments; the package itself never imports this
module.

Notation used below: z0 = 0.3 + 1.1j is the standard test point;
W(kappa, mu, y) is the decaying Whittaker solution; Mplus the growing one;
zhat the completed zeta; E_k(z, s) the raw lattice sum; Ehat_k its
completion; the doubly-completed value carries the extra polynomial factor
(s + k/2)(s + k/2 - 1).
"""

Z0_X = 0.3
Z0_Y = 1.1

# --- gamma / digamma (mpmath gamma, digamma) -------------------------------
GAMMA_A = complex(-2.05552988372591687155e-10, -5.66764421421071048537e-10)  # gamma(0.5+14.1j)
GAMMA_B = complex(0.233707620947468520428, -0.017273606366183626439)         # gamma(-3.7+0.1j)
GAMMA_C = 14034.4072934834125986                                             # gamma(8.5)
DIGAMMA_A = complex(1.35769694203957135737, -0.599729405175855532298)        # digamma(3.7-2.2j)
DIGAMMA_B = complex(1.50273394644692294278, 2.81323304240832623412)          # digamma(-2.3+0.4j)

# --- zeta and completed zeta (mpmath zeta; zhat = pi^(-s/2) Gamma(s/2) zeta) ---
ZETA_A = 1.15194479472077371345                                              # zeta(3.3)
ZETA_B = complex(0.0222411426099935892462, -0.103258123266450057902)         # zeta(0.5+14j)
ZHAT_A = 0.156831484071723869338                                             # zhat(3.3)
ZHAT_B = -0.0871708556231511374214                                           # zhat(0.5+3j)  (real on the critical line with real part convention: value is real)
ZHAT_C = 0.0609765214503279504685                                            # zhat(-6)
ZHAT_D = complex(0.228860055246232416326, 0.059672659379121861625)           # zhat(-1.7+0.3j)
ZHAT_E = 19.0707277893640545179                                              # zhat(1.05)
ZHAT_F = complex(-31.0077298143253672956, -9.98937067569460552711)           # zhat(0.97+0.01j)
ZHAT_G = 32.385562925496103516                                               # zhat(-0.03)
ZHAT_H = 0.109662271123215095765                                             # zhat(4)

# --- power-divisor sum ------------------------------------------------------
SIGMA_A = complex(-396.098204392052108397, -439.52561056389193226)           # sigma_{2.5-1j}(12)

# --- Whittaker W (mpmath whitw; complex mu by its integral/recurrence) ------
WHIT_A = 0.397477767248402435029                                             # W(1, 0.3, 5)
WHIT_B = complex(0.0507588285898879791699, 0.00550048920034290846087)        # W(-1, 0.8+0.3j, 3)
WHIT_C = complex(0.857207306616519168802, 0.075469050947888899932)           # W(2, 0.25+1j, 7)
WHIT_D = 2.05312097600626806296e-9                                           # W(0, 0.3, 40)
WHIT_E = 3.23514718133170417595e-6                                           # W(-2, 0.45, 14)
WHIT_F = 3.19129014821849253649                                              # W(3, 0.2, 9)

# --- mu-derivatives of W (Cauchy circle around mu at 40 digits) -------------
WMU1_A = 0.0478592679534174670817    # d/dmu   W(1, 0.3, 5)
WMU2_A = 0.164681838522864677003     # d2/dmu2 W(1, 0.3, 5)
WMU1_B = complex(0.013585827712496356707, 0.00744768889597471135338)   # d/dmu   W(-1, 0.4+0.2j, 2.5)
WMU2_B = complex(0.03649144115627308556, 0.00399626864505396347513)    # d2/dmu2 W(-1, 0.4+0.2j, 2.5)
WMU2_C = 0.0958668882647895823042    # d2/dmu2 W(1, 0, 6)
WMU4_C = 0.0874234564200364176141    # d4/dmu4 W(1, 0, 6)

# --- growing solution Mplus (connection formula at 40 digits) ---------------
MPLUS_A = complex(3.01004672189155857477, 0.20404403257090278305)      # Mplus(0, 0.3, 2)
MPLUS_B = complex(-0.157904313125264701162, -2.2604848315384956875)    # Mplus(1, 0.45, 1.5)
MPLUS_C = complex(-15.730241891098091157, 1.07019978291754642395)      # Mplus(-1, 0.2+0.5j, 3)

# --- raw lattice sums E_k(z, s) (mpmath double sum with tail bound) ----------
E4_I_2 = 1.8808830130829151509                                         # E_4(i, 2)
E0_A = 2.5562709160554082442                                           # E_0(z0, 2.5)
EM2_A = complex(-0.134211937348859103696, 0.124720112393809467622)     # E_{-2}(0.2+0.9j, 2.2)
E2_A = complex(0.585344733993487509235, -0.0852240207243779932726)     # E_2(z0, 1.7)
E2_B = complex(0.531910425196019079318, 0.0306745991723134501031)      # E_2(z0, 1.4+0.5j)

# --- completed values Ehat_k(z0, s); each constant equals the value at the
#     stated s AND at the reflected point 1-k-s (functional equation) --------
EHAT0_A = complex(-0.652886010497292898738, 0.384155799636702779575)   # s = 0.25+0.6j (and 0.75-0.6j)
EHAT4_A = complex(0.483155403888965216985, 0.12896913865715972004)     # k=4, s = -1.3+0.2j (and -1.7-0.2j)
EHATM2_A = complex(0.0875393412662408279225, 0.0142934146358285019888) # k=-2, s = 1.9 (and 1.1)
EHAT2_A = complex(0.0831098662182005258151, -0.00707788059328597778101)  # k=2, s = 0.8+0.3j (and -1.8-0.3j)

# --- constant term of Ehat at the center s = (1-k)/2, y = 1.1 ----------------
CTR0 = -1.94920956860397820535
CTR2 = 0.0674582398801477096985
CTR4 = 0.52538059494819786942
CTRM2 = 0.0816244702549787419165
CTRM4 = 0.769209729063656749052

# --- full Ehat_k(z0, center) -------------------------------------------------
EHAT0_CTR = -1.94981719732617150255
EHAT2_CTR = complex(0.0712814227214864869904, -0.0116860336828131444687)
EHAT4_CTR = complex(0.483948810685905893251, 0.125006028500417369724)
EHATM2_CTR = complex(0.0862505214929986631867, 0.0141401007562039070906)
EHATM4_CTR = complex(0.708549453725235047152, -0.183021326327461130124)

# --- doubly-completed weight-0 value at the poles of the single completion ---
DC0_AT0 = 0.5   # exactly, at s = 0
DC0_AT1 = 0.5   # exactly, at s = 1

# --- s-Taylor coefficients (derivative / n!) of the doubly-completed value
#     at k = 2, s0 = 0.3, z = z0 (Cauchy circle, radius 0.25, 40 digits) ------
TAY2_03 = [
    complex(0.0294965772604316085118, -0.00475831867134177372338),
    complex(0.125372554531755383501, -0.020033673780519107908),
    complex(0.0965514253159478335876, -0.014649541721251750361),
    complex(0.0239961537265889590883, -0.00277013233107348136002),
    complex(0.00951318707481038223979, -0.00104040623721261363276),
]

# --- two-variable lattice function G(z; alpha, beta) -------------------------
G_A = complex(0.849170857935340715467, -0.129573194602409142948)       # G(z0; 3.2, 1.2)
G_B = complex(0.775160402591478093842, 0.00913488006894821833123)      # G(z0; 2.9+0.4j, 0.9+0.4j)
