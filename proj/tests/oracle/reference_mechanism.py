"""Slow reference model of the auction used to freeze expected values in the
C++ tests. Thresholds are found by scanning every integer bid."""
import itertools
import sys


def efo(values, k):
    vals = sorted(values, reverse=True)
    best, best_j = 0, 0
    for j in range(1, min(k, len(vals)) + 1):
        if j * vals[j - 1] > best:
            best, best_j = j * vals[j - 1], j
    return best, best_j, (vals[best_j - 1] if best_j else 0)


def extractor_winners(target, bids, k):
    """bids: list of (id, value); pads are not listed."""
    length = max(len(target), len(bids))
    t = sorted(target, reverse=True) + [0] * (length - len(target))
    b = sorted((v for _, v in bids), reverse=True)
    b += [0] * (length - len(b))
    revenue, _, reserve = efo(t, k)
    if revenue == 0 or any(x < y for x, y in zip(b, t)):
        return []
    order = sorted(bids, key=lambda e: (-e[1], e[0]))
    return [i for i, v in order if v >= reserve][:k]


def extract(target, bids, k):
    pay = {}
    for agent in extractor_winners(target, bids, k):
        v = dict(bids)[agent]
        for b in range(0, v + 1):
            trial = [(i, b if i == agent else x) for i, x in bids]
            if agent in extractor_winners(target, trial, k):
                pay[agent] = b
                break
    return pay


def bspe(values, labels, k):
    """values: list indexed by agent id - 1; labels: string over 'ABC'."""
    agents = [(i + 1, v) for i, v in enumerate(values)]
    group = {i: labels[i - 1] for i, _ in agents}
    max_a = max([v for i, v in agents if group[i] == 'A'], default=0)
    max_b = max([v for i, v in agents if group[i] == 'B'], default=0)
    swapped = max_b > max_a
    top_label, sample_label = ('B', 'A') if swapped else ('A', 'B')
    market = [(i, v) for i, v in agents if group[i] != sample_label]
    sample = [v for i, v in agents if group[i] == sample_label]
    pay = extract(sample, market, k)

    top_group = sorted([(i, v) for i, v in agents if group[i] == top_label], key=lambda e: (-e[1], e[0]))
    if top_group:
        top = top_group[0][0]
        runner_up = top_group[1][1] if len(top_group) > 1 else 0
        sample_max = max(sample, default=0)
        pivotal = runner_up <= sample_max if swapped else runner_up < sample_max
        if pivotal and top in pay:
            pay[top] = max(pay[top], sample_max)

    if not pay and agents and k >= 1:
        order = sorted(agents, key=lambda e: (-e[1], e[0]))
        pay[order[0][0]] = order[1][1] if len(order) > 1 else 0
    return pay


def expected_revenue(values, k, p):
    total = 0.0
    for labels in itertools.product('ABC', repeat=len(values)):
        coin = sum(1 for c in labels if c != 'C')
        weight = p ** coin * (1 - 2 * p) ** (len(values) - coin)
        total += weight * sum(bspe(values, labels, k).values())
    return total


if __name__ == '__main__':
    for values, k in [((10, 8, 5, 4, 2), 5), ((10, 8, 5, 4, 2), 1), ((3600, 1800, 1200, 900, 720), 5),
                      ((7,), 1), ((9, 9, 3, 3), 2)]:
        print(values, k, repr(expected_revenue(list(values), k, 0.26)))
    print(bspe([80, 70, 65, 90, 66], 'ABBCC', 5))
    print(bspe([8, 7, 6, 5, 4], 'ABBCC', 5))
    sys.exit(0)
