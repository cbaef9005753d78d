"""Independent brute-force oracle used to cross-check the semantics
engine.  Deliberately naive: plain recursion and itertools subset
enumeration, no bit-parallel tricks, its own reduct."""

from itertools import chain, combinations

from nlp2dlp.syntax import And, Bot, Not, Or, Top, Var


def subsets(atoms):
    atoms = sorted(atoms)
    return (frozenset(c) for c in
            chain.from_iterable(combinations(atoms, k)
                                for k in range(len(atoms) + 1)))


def eval_expr(expr, interp):
    if isinstance(expr, Top):
        return True
    if isinstance(expr, Bot):
        return False
    if isinstance(expr, Var):
        return expr.atom in interp
    if isinstance(expr, Not):
        return not eval_expr(expr.child, interp)
    if isinstance(expr, And):
        return eval_expr(expr.left, interp) and eval_expr(expr.right, interp)
    return eval_expr(expr.left, interp) or eval_expr(expr.right, interp)


def reduce_expr(expr, interp):
    if isinstance(expr, Not):
        return Bot() if eval_expr(expr.child, interp) else Top()
    if isinstance(expr, And):
        return And(reduce_expr(expr.left, interp), reduce_expr(expr.right, interp))
    if isinstance(expr, Or):
        return Or(reduce_expr(expr.left, interp), reduce_expr(expr.right, interp))
    return expr


def is_model(rules, interp):
    return all((not eval_expr(b, interp)) or eval_expr(h, interp)
               for h, b in rules)


def naive_answer_sets(program, alphabet):
    rules = [(r.head, r.body) for r in program.rules]
    stable = set()
    for interp in subsets(alphabet):
        reduced = [(reduce_expr(h, interp), reduce_expr(b, interp))
                   for h, b in rules]
        if not is_model(reduced, interp):
            continue
        if any(is_model(reduced, sub) for sub in subsets(interp)
               if sub != interp):
            continue
        stable.add(interp)
    return frozenset(stable)


def naive_minimal_models(program, alphabet):
    rules = [(r.head, r.body) for r in program.rules]
    models = [i for i in subsets(alphabet) if is_model(rules, i)]
    return frozenset(m for m in models
                     if not any(o < m for o in models))
