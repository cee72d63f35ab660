//! Built-in worked examples, each a list of exact checks.

use lpdo::*;
use serde_json::{json, Value};

use crate::report::{mark, Report};

pub struct Check {
    pub what: String,
    pub pass: bool,
}

pub struct Item {
    pub name: &'static str,
    pub checks: Vec<Check>,
}

impl Item {
    pub fn pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }
}

fn op(s: &str) -> Lpdo {
    parse_operator(s).expect("corpus expressions parse")
}

fn check(what: impl Into<String>, pass: bool) -> Check {
    Check {
        what: what.into(),
        pass,
    }
}

fn holding(l: &Lpdo) -> Vec<String> {
    let (_, sweep) = factorization_types(l).expect("form (1)");
    sweep.into_iter().filter(|r| r.holds).map(|r| r.label).collect()
}

pub const LANDAU: &str = "Dx^3 + x*Dx^2*Dy + 2*Dx^2 + (2*x + 2)*Dx*Dy + Dx + (x + 2)*Dy";
pub const FIRST_TRIPLE: &str = "(Dx + Dy + x) * (Dx*Dy + y*Dx + y^2*Dy + y^3)";
pub const TWO_TYPES: &str = "Dx^2*Dy + Dx*Dy^2 + (x - y)*(Dx + Dy)";
pub const INNER_FACTOR: &str = "Dx*Dy*(Dx + Dy) + x*Dx^2 + (2 - x^2)*Dx + x*Dy - 2*x + x^2";

fn landau() -> Item {
    let l = op(LANDAU);
    let (q, p) = (op("Dx + 1"), op("Dx + x*Dy"));
    let r = op("Dx^2 + x*Dx*Dy + Dx + (x + 2)*Dy");
    let rd = right_divide(&l, &q).unwrap();
    let ld = left_divide(&l, &q).unwrap();
    let inner = right_divide(&ld.quotient, &q).unwrap();
    Item {
        name: "Landau operator",
        checks: vec![
            check("(Dx + 1)*(Dx + 1)*(Dx + x*Dy) expands to L", Lpdo::compose_all([&q, &q, &p]) == l),
            check("R*(Dx + 1) expands to L", &r * &q == l),
            check("right division by Dx + 1 is exact with quotient R", rd.is_exact() && rd.quotient == r),
            check("left division by Dx + 1 is exact", ld.is_exact()),
            check("no (X)(S)(X) factorization through Dx + 1", !inner.is_exact()),
        ],
    }
}

fn triple_item(name: &'static str, first: &str, second: &str, f1: &str, f2: &str, middle: &str) -> Item {
    let l = op(first);
    let got = construct_triple(&l, &op(f1), &op(f2));
    let ok = got
        .as_ref()
        .is_ok_and(|fac| fac.factors == vec![op(f1), op(middle), op(f2)]);
    Item {
        name,
        checks: vec![
            check("both factorizations agree", l == op(second)),
            check(format!("triple with outer factors {f1}, {f2} has middle {middle}"), ok),
        ],
    }
}

fn two_types() -> Item {
    let l = op(TWO_TYPES);
    let inv = compute_invariants(&l).unwrap();
    let zero = RatFunc::zero();
    let xy = parse_function("x - y").unwrap();
    let expected = InvariantSet::new(RatFunc::one(), [zero.clone(), zero.clone(), xy.clone(), xy, zero]);
    let f1 = Factorization::new(vec![op("Dx*Dy + x - y"), op("Dx + Dy")]);
    let f2 = Factorization::new(vec![op("Dx + Dy"), op("Dx*Dy + x - y")]);
    Item {
        name: "two-type operator",
        checks: vec![
            check("invariants (1, 0, 0, x - y, x - y, 0)", inv == expected),
            check("exactly (S)(XY) and (XY)(S) hold", holding(&l) == ["(S)(XY)", "(XY)(S)"]),
            check(format!("{f1} verifies"), verify_factorization(&l, &f1)),
            check(format!("{f2} verifies"), verify_factorization(&l, &f2)),
        ],
    }
}

fn order_four() -> Item {
    let inner = op(INNER_FACTOR);
    let first = &op("Dx + Dy") * &inner;
    let second = &op("Dx*(Dx + Dy)^2 - x*Dx*(Dx + Dy) + (x - 2)*Dx + (x - 1)*Dy + 1") * &op("Dy + x");
    let unit = classify_normal_form(&inner)
        == Ok(NormalForm::Hyperbolic {
            p: RatFunc::one(),
            q: RatFunc::one(),
        });
    let types = holding(&inner);
    let witness = Factorization::new(vec![op("Dx^2 + Dx*Dy - x*Dx + x - 1"), op("Dy + x")]);
    Item {
        name: "order-4 operator",
        checks: vec![
            check("both factorizations agree", first == second),
            check("inner factor is hyperbolic with q = 1", unit),
            check(
                format!("inner factor admits none of the twelve types (holding: [{}])", types.join(", ")),
                types.is_empty(),
            ),
            check(
                format!("inner factor equals {witness}"),
                verify_factorization(&inner, &witness),
            ),
        ],
    }
}

fn dxdy_s() -> Item {
    let l = op("Dx*Dy*(Dx + Dy)");
    let full = check_complete_reducibility(&l, &[op("Dx"), op("Dy"), op("Dx + Dy")]).unwrap();
    let partial = check_complete_reducibility(&l, &[op("Dx"), op("Dy")]).unwrap();
    let group = group_conditions(&compute_invariants(&l).unwrap(), Group::I).unwrap();
    Item {
        name: "Dx*Dy*(Dx + Dy)",
        checks: vec![
            check(
                "completely reducible by Dx, Dy, Dx + Dy in group I",
                full.status == ReducibilityStatus::CompletelyReducible && full.group == Some(Group::I),
            ),
            check("group I conditions hold", group.holds),
            check(
                "Dx, Dy alone fail the lcm check",
                !partial.lcm_matches && partial.status == ReducibilityStatus::NotByTheseFactors,
            ),
        ],
    }
}

pub fn items() -> Vec<fn() -> Item> {
    vec![
        landau,
        || {
            triple_item(
                "triple with left factor Dx + Dy + x",
                FIRST_TRIPLE,
                "(Dx^2 + Dx*Dy + (x + y^2)*Dx + y^2*Dy + x*y^2 + 2*y) * (Dy + y)",
                "Dx + Dy + x",
                "Dy + y",
                "Dx + y^2",
            )
        },
        || {
            triple_item(
                "triple with left factor Dx + x",
                "(Dx + x) * (Dx*Dy + y*Dx + y^2*Dy + y^3)",
                "(Dx^2 + (x + y^2)*Dx + x*y^2) * (Dy + y)",
                "Dx + x",
                "Dy + y",
                "Dx + y^2",
            )
        },
        || {
            triple_item(
                "triple with left factor Dy + x",
                "(Dy + x) * (Dx^2 + y*Dx + y^3 - y^4)",
                "(Dx*Dy + x*Dx + y^2*Dy + x*y^2 + 2*y) * (Dx + y - y^2)",
                "Dy + x",
                "Dx + y - y^2",
                "Dx + y^2",
            )
        },
        two_types,
        order_four,
        dxdy_s,
    ]
}

/// Runs every item on its own thread; results keep corpus order.
pub fn run() -> Vec<Item> {
    std::thread::scope(|s| {
        let handles: Vec<_> = items().into_iter().map(|f| s.spawn(f)).collect();
        handles.into_iter().map(|h| h.join().expect("corpus item panicked")).collect()
    })
}

pub fn report() -> Report {
    let items = run();
    let mut r = Report::new("examples", Value::Null);
    let json_items: Vec<Value> = items
        .iter()
        .map(|it| {
            json!({
                "name": it.name,
                "pass": it.pass(),
                "checks": it.checks.iter().map(|c| json!({ "check": c.what, "pass": c.pass })).collect::<Vec<_>>(),
            })
        })
        .collect();
    let passed = items.iter().filter(|it| it.pass()).count();
    r.field("items", json_items, format!("{passed}/{} pass", items.len()));
    for it in &items {
        r.note(format!("{} {}", mark(it.pass()), it.name));
        for c in &it.checks {
            r.note(format!("    {} {}", mark(c.pass), c.what));
        }
    }
    let all = passed == items.len();
    r.verdict(if all { "all items pass" } else { "some items fail" }, all);
    r
}
