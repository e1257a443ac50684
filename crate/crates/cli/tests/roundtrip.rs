use frobgrann_cli::parse_session;
use frobgrann_cli::syntax::{parse_program, Arg, BindingKind, Call, Expr, Program, Statement};
use proptest::prelude::*;

fn name() -> impl Strategy<Value = String> {
    prop::sample::select(vec!["t1", "t2", "x", "M", "I", "identity"]).prop_map(str::to_string)
}

fn poly_expr() -> impl Strategy<Value = Expr> {
    let leaf = prop_oneof![(0u64..20).prop_map(Expr::Int), name().prop_map(Expr::Name)];
    leaf.prop_recursive(4, 24, 2, |inner| {
        prop_oneof![
            inner.clone().prop_map(|e| Expr::Neg(Box::new(e))),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Expr::Add(Box::new(a), Box::new(b))),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Expr::Sub(Box::new(a), Box::new(b))),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Expr::Mul(Box::new(a), Box::new(b))),
            (inner.clone(), 0u64..5).prop_map(|(a, e)| Expr::Pow(Box::new(a), e)),
            proptest::collection::vec(inner, 0..3).prop_map(Expr::List),
        ]
    })
}

fn call() -> impl Strategy<Value = Call> {
    (
        name(),
        proptest::collection::vec((proptest::option::of(name()), poly_expr()), 0..4),
    )
        .prop_map(|(name, args)| Call {
            name,
            args: args
                .into_iter()
                .map(|(key, value)| Arg { key, value })
                .collect(),
        })
}

fn statement() -> impl Strategy<Value = Statement> {
    prop_oneof![
        (
            prop::sample::select(vec![
                BindingKind::Ring,
                BindingKind::Ideal,
                BindingKind::Module
            ]),
            name(),
            call()
        )
            .prop_map(|(kind, name, def)| Statement::Bind { kind, name, def }),
        call().prop_map(Statement::Show),
        call().prop_map(Statement::Check),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn print_then_parse_is_identity(stmts in proptest::collection::vec(statement(), 0..6)) {
        let program = Program { positions: vec![Default::default(); stmts.len()], statements: stmts };
        let printed = program.to_string();
        let reparsed = parse_program(&printed).unwrap();
        prop_assert_eq!(reparsed, program, "{}", printed);
    }
}

#[test]
fn session_scripts_round_trip() {
    for case in frobgrann_cli::golden::CASES {
        let s = parse_session(case.script).unwrap();
        assert_eq!(parse_session(&s.to_string()).unwrap(), s, "{}", case.name);
    }
}
