"""Plotted coordinates of the hitting-set / lower-bound comparison figure (h curves) and its plot sources."""

H_3_9 = [
    0.240195, 0.265437, 0.294032, 0.326511, 0.363491, 0.405691, 0.453947,
    0.509230, 0.572667, 0.645563, 0.729432, 0.826022, 0.937353,
]
H_4_27 = [
    0.081423, 0.088437, 0.096230, 0.104904, 0.114570, 0.125359, 0.137414, 0.150900, 0.166002,
    0.182930, 0.201920, 0.223239, 0.247188, 0.274105, 0.304374, 0.338425, 0.376743, 0.419876,
    0.468438, 0.523124, 0.584714, 0.654087, 0.732233, 0.820265, 0.919438,
]
H_4_64 = [
    0.064446, 0.071012, 0.078371, 0.086626, 0.095892, 0.106302, 0.118001, 0.131157, 0.145958,
    0.162614, 0.181365, 0.202478, 0.226258, 0.253046, 0.283226, 0.317232, 0.355553, 0.398740,
    0.447413, 0.502271, 0.564103, 0.633796, 0.712351, 0.800895, 0.900699,
]


def h_points():
    """[(k, r, p, h)] for every plotted coordinate."""
    pts = [(3, 9, round(0.05 * i, 10), v) for i, v in enumerate(H_3_9)]
    pts += [(4, 27, round(0.03 * i, 10), v) for i, v in enumerate(H_4_27)]
    pts.append((4, 27, 0.74, 0.99243220))
    pts += [(4, 64, round(0.03 * i, 10), v) for i, v in enumerate(H_4_64)]
    pts.append((4, 64, 0.745, 0.9934963))
    return pts


# lambda constants as printed in the plot sources of g
G_LAMBDA = {(3, 9): 0.942809, (4, 27): 0.9428090, (4, 64): 0.8660254}
