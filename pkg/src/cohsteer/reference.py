"""Measured criterion values (mean, one-sigma error) of the reference optical run.

Keys are measure name then theta in degrees; each entry holds
``(S_0, S_12/2, S_012/3)`` as ``(value, error)`` pairs.
"""

MEASURED_TABLES = {
    "l1c": {
        0.0: ((2.0150, 0.0186), (2.0017, 0.0200), (2.0062, 0.0195)),
        10.0: ((1.8993, 0.0317), (2.3376, 0.0303), (2.1915, 0.0307)),
        20.0: ((1.5504, 0.0250), (2.6373, 0.0171), (2.2750, 0.0197)),
        30.0: ((1.0188, 0.0215), (2.8617, 0.0149), (2.2474, 0.0171)),
        40.0: ((0.3636, 0.0274), (2.9810, 0.0447), (2.1085, 0.0389)),
        45.0: ((0.0378, 0.0493), (2.9954, 0.0465), (2.0095, 0.0474)),
        50.0: ((0.3562, 0.0289), (2.9808, 0.0389), (2.1060, 0.0356)),
        60.0: ((1.0102, 0.0216), (2.8628, 0.0117), (2.2453, 0.0150)),
        70.0: ((1.5372, 0.0189), (2.6423, 0.0113), (2.2740, 0.0138)),
        80.0: ((1.8884, 0.0194), (2.3396, 0.0214), (2.1892, 0.0207)),
        90.0: ((2.0038, 0.0148), (2.0008, 0.0156), (2.0018, 0.0153)),
    },
    "rec": {
        0.0: ((1.9668, 0.0315), (1.9686, 0.0199), (1.9680, 0.0238)),
        10.0: ((1.8213, 0.0596), (2.1729, 0.0550), (2.0557, 0.0565)),
        20.0: ((1.3416, 0.0409), (2.4911, 0.0490), (2.1079, 0.0463)),
        30.0: ((0.7043, 0.0303), (2.7880, 0.0512), (2.0934, 0.0442)),
        40.0: ((0.1257, 0.0141), (2.9562, 0.0911), (2.0127, 0.0654)),
        45.0: ((0.0015, 0.0107), (2.9741, 0.0920), (1.9832, 0.0649)),
        50.0: ((0.1204, 0.0136), (2.9531, 0.0859), (2.0089, 0.0618)),
        60.0: ((0.7000, 0.0264), (2.7898, 0.0421), (2.0932, 0.0369)),
        70.0: ((1.3388, 0.0258), (2.5030, 0.0334), (2.1149, 0.0309)),
        80.0: ((1.8187, 0.0375), (2.1761, 0.0402), (2.0570, 0.0393)),
        90.0: ((1.9613, 0.0204), (1.9681, 0.0126), (1.9658, 0.0152)),
    },
    "sic": {
        0.0: ((1.8415, 0.0469), (1.8485, 0.0312), (1.8462, 0.0364)),
        10.0: ((1.7164, 0.0887), (2.0112, 0.0717), (1.9129, 0.0773)),
        20.0: ((1.1184, 0.0581), (2.2734, 0.0835), (1.8884, 0.0751)),
        30.0: ((0.4857, 0.0275), (2.6241, 0.1025), (1.9113, 0.0775)),
        40.0: ((0.0587, 0.0061), (2.8415, 0.1412), (1.9139, 0.0962)),
        45.0: ((0.0005, 0.0066), (2.8488, 0.1353), (1.8994, 0.0924)),
        50.0: ((0.0560, 0.0064), (2.8193, 0.1352), (1.8982, 0.0922)),
        60.0: ((0.4819, 0.0247), (2.6266, 0.0920), (1.9117, 0.0695)),
        70.0: ((1.1273, 0.0441), (2.3041, 0.0656), (1.9118, 0.0584)),
        80.0: ((1.7139, 0.0727), (2.0180, 0.0607), (1.9166, 0.0647)),
        90.0: ((1.8288, 0.0346), (1.8475, 0.0222), (1.8413, 0.0264)),
    },
}

# Entropic steering test, n = 2.
MEASURED_SIGEUR = {10.0: (0.8869, 0.0049), 80.0: (0.8876, 0.0043)}

# Mean Uhlmann fidelity of the prepared states.
MEASURED_STATE_FIDELITY = 0.9987
