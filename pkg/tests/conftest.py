from polygram.poly import MultiPoly

# Randomized property suites run this many cases each.
CASES = 1000


def random_poly(rng, letters, max_terms=4, max_exp=6, max_coeff=8):
    terms = {}
    for _ in range(rng.randint(0, max_terms)):
        exps = tuple(rng.randint(0, max_exp) for _ in letters)
        coeff = rng.randint(-max_coeff, max_coeff)
        if coeff:
            terms[exps] = coeff
    return MultiPoly(letters, terms)
