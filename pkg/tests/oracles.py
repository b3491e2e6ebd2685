"""Independent reference computations used by the tests."""
import itertools
import math


def ttr_ref(tokens):
    return len(set(tokens)) / len(tokens) if tokens else 0.0


def msttr_ref(tokens, size=50):
    if len(tokens) < size:
        return ttr_ref(tokens)
    segs = [tokens[i * size:(i + 1) * size] for i in range(len(tokens) // size)]
    scores = [len(set(s)) / size for s in segs]
    return sum(scores) / len(scores)


def mattr_ref(tokens, size=100):
    if len(tokens) < size:
        return ttr_ref(tokens)
    scores = [len(set(tokens[i:i + size])) / size for i in range(len(tokens) - size + 1)]
    return sum(scores) / len(scores)


def mtld_factors_ref(tokens, threshold=0.72):
    """Factor count by explicit segment search: the shortest prefix whose
    TTR drops below the threshold closes a factor."""
    factors = 0.0
    start = 0
    n = len(tokens)
    while start < n:
        end = None
        for stop in range(start + 1, n + 1):
            seg = tokens[start:stop]
            if len(set(seg)) / len(seg) < threshold:
                end = stop
                break
        if end is None:
            rest = tokens[start:]
            factors += (1 - len(set(rest)) / len(rest)) / (1 - threshold)
            break
        factors += 1
        start = end
    return factors


def mtld_ref(tokens, threshold=0.72):
    if not tokens:
        return 0.0
    vals = []
    for seq in (list(tokens), list(tokens)[::-1]):
        f = mtld_factors_ref(seq, threshold)
        vals.append(len(seq) / f if f else float(len(seq)))
    return (vals[0] + vals[1]) / 2


def nb_log_posterior_ref(X, y, x, alpha, n_classes):
    """Log of prior * prod_j theta_cj ** x_j, straight from the definition."""
    d = len(X[0])
    out = []
    for c in range(n_classes):
        rows = [X[i] for i in range(len(X)) if y[i] == c]
        prior = len(rows) / len(X)
        total = sum(sum(r) for r in rows)
        prod = prior
        for j in range(d):
            theta = (sum(r[j] for r in rows) + alpha) / (total + alpha * d)
            prod *= theta ** x[j]
        out.append(math.log(prod))
    return out


def lr_loss_ref(W, b, X, Y, strength):
    n = len(X)
    k = len(b)
    loss = 0.0
    for c in range(k):
        for i in range(n):
            z = sum(X[i][j] * W[j][c] for j in range(len(W))) + b[c]
            p = 1 / (1 + math.exp(-z))
            loss -= Y[i][c] * math.log(p) + (1 - Y[i][c]) * math.log(1 - p)
    loss /= n
    loss += strength / (2 * n) * sum(w * w for row in W for w in row)
    return loss


def enumerate_nb_instances():
    """Fixed enumeration: 1-3 classes, 1-4 features, small rational grids."""
    grid = (0.0, 0.25, 0.5, 1.0)
    for k in (1, 2, 3):
        for d in (1, 2, 3, 4):
            for seed in range(3):
                rows, labels = [], []
                for i in range(2 * k + 1):
                    rows.append([grid[(i * 7 + j * 3 + seed * 5) % 4] for j in range(d)])
                    labels.append(i % k)
                probes = list(itertools.islice(itertools.product(grid, repeat=d), 0, 16))
                for alpha in (0.5, 1.0, 2.0):
                    yield rows, labels, [list(p) for p in probes], alpha, k


def pearson_ref(x, y):
    n = len(x)
    mx, my = sum(x) / n, sum(y) / n
    cov = sum((a - mx) * (b - my) for a, b in zip(x, y))
    vx = sum((a - mx) ** 2 for a in x)
    vy = sum((b - my) ** 2 for b in y)
    return cov / math.sqrt(vx * vy)
