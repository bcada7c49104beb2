use ordsum::expr::{ordinal_outcome, subst_outcome};
use ordsum::oracle::{expand, random_expr, GenConfig};
use ordsum::{
    grundy_of, outcome_of, parse, render, vset_of, ChainSpec, Evaluator, Expr, GameArena,
};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn small_expr() -> impl Strategy<Value = Expr> {
    any::<u64>().prop_map(|seed| {
        let cfg = GenConfig {
            max_expr_depth: 3,
            max_nimber: 5,
            ..GenConfig::default()
        };
        random_expr(&cfg, &mut ChaCha8Rng::seed_from_u64(seed))
    })
}

proptest! {
    #[test]
    fn right_operand_matters_only_through_its_grundy_value(
        g in small_expr(), h in small_expr(), s in small_expr()
    ) {
        let star = Expr::nim(grundy_of(&h).unwrap());
        prop_assert_eq!(
            grundy_of(&Expr::subst(g.clone(), h, s.clone())).unwrap(),
            grundy_of(&Expr::subst(g, star, s)).unwrap()
        );
    }

    #[test]
    fn substitution_matters_only_through_its_grundy_value(
        g in small_expr(), h in small_expr(), s in small_expr()
    ) {
        let star = Expr::nim(grundy_of(&s).unwrap());
        prop_assert_eq!(
            grundy_of(&Expr::subst(g.clone(), h.clone(), s)).unwrap(),
            grundy_of(&Expr::subst(g, h, star)).unwrap()
        );
    }

    #[test]
    fn outcome_shortcuts_agree_with_variation_sets(
        g in small_expr(), h in small_expr(), s in small_expr()
    ) {
        let (og, oh, os) = (outcome_of(&g).unwrap(), outcome_of(&h).unwrap(), outcome_of(&s).unwrap());
        let e = Expr::subst(g.clone(), h.clone(), s);
        let mut ev = Evaluator::new();
        prop_assert_eq!(subst_outcome(og, oh, os), ev.outcome_by_vset(&e).unwrap());
        let o = Expr::ordinal(g, h);
        prop_assert_eq!(ordinal_outcome(og, oh), ev.outcome_by_vset(&o).unwrap());
    }

    #[test]
    fn render_then_parse_is_identity(e in small_expr()) {
        prop_assert_eq!(parse(&render(&e).unwrap()).unwrap(), e);
    }

    #[test]
    fn chain_formula_matches_set_evaluation(
        a in prop::collection::vec(0u64..6, 1..6),
        hats in prop::collection::vec(0u64..6, 5)
    ) {
        let ahat = hats[..a.len() - 1].to_vec();
        let c = ChainSpec::new(a, ahat).unwrap();
        prop_assert_eq!(c.grundy().unwrap(), grundy_of(&c.to_expr()).unwrap());
    }

    #[test]
    fn explicit_leaves_evaluate_like_their_source(e in small_expr(), f in small_expr()) {
        let mut arena = GameArena::new();
        let Ok(g) = expand(&mut arena, &e) else { return Ok(()) };
        let mixed = Expr::sum(Expr::Explicit(g), f.clone());
        let want = vset_of(&Expr::sum(e, f)).unwrap();
        prop_assert_eq!(Evaluator::with_arena(&mut arena).vset(&mixed).unwrap(), want);
    }
}
