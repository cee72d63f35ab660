use lpdo::*;
use serde_json::{json, Value};

use crate::report::{mark, CliError, Report};

pub type Outcome = Result<Report, CliError>;

pub fn operator(what: &str, src: &str) -> Result<Lpdo, CliError> {
    parse_operator(src).map_err(|err| CliError::Parse {
        what: what.into(),
        err,
    })
}

fn function(what: &str, src: &str) -> Result<RatFunc, CliError> {
    parse_function(src).map_err(|err| CliError::Parse {
        what: what.into(),
        err,
    })
}

fn linear_symbol(what: &str, f: &Lpdo) -> Result<LinearForm, CliError> {
    f.symbol()?
        .as_linear()
        .ok_or_else(|| CliError::Usage(format!("{what} must be a first-order operator")))
}

fn factors_json(fac: &Factorization) -> Value {
    fac.factors.iter().map(|f| f.to_string()).collect()
}

pub fn echo(src: &str) -> Outcome {
    let l = operator("operator", src)?;
    let mut r = Report::new("echo", src);
    r.operator(&l);
    r.field("order", l.order(), l.order().map_or("-inf".into(), |o| o.to_string()));
    Ok(r)
}

pub fn compose(srcs: &[String]) -> Outcome {
    let ops = srcs
        .iter()
        .enumerate()
        .map(|(k, s)| operator(&format!("operand {}", k + 1), s))
        .collect::<Result<Vec<_>, _>>()?;
    let l = Lpdo::compose_all(&ops);
    let mut r = Report::new("compose", srcs.to_vec());
    r.operator(&l);
    r.field("product", l.to_string(), &l);
    Ok(r)
}

pub fn symbol(src: &str) -> Outcome {
    let l = operator("operator", src)?;
    let s = l.symbol()?;
    let mut r = Report::new("symbol", src);
    r.operator(&l);
    r.field("degree", s.degree(), s.degree());
    r.field("symbol", s.to_string(), &s);
    Ok(r)
}

pub fn invariants(src: &str) -> Outcome {
    let l = normalize_form1(&operator("operator", src)?)?;
    let inv = compute_invariants(&l)?;
    let mut r = Report::new("invariants", src);
    r.operator(&l);
    for (name, v) in InvariantSet::NAMES.iter().zip(inv.as_array()) {
        r.field(name, v.to_string(), v);
    }
    Ok(r)
}

pub fn gauge(src: &str, g: &str) -> Outcome {
    let l = operator("operator", src)?;
    let g = function("gauge function", g)?;
    let lg = l.gauge(&g)?;
    let mut r = Report::new("gauge", json!({ "operator": src, "g": g.to_string() }));
    r.operator(&l);
    r.field("gauged", lg.to_string(), &lg);
    Ok(r)
}

pub fn divide(src: &str, factor: &str, left: bool) -> Outcome {
    let l = operator("operator", src)?;
    let f = operator("factor", factor)?;
    let d = if left { left_divide(&l, &f)? } else { right_divide(&l, &f)? };
    let (name, key) = if left {
        ("divide-left", "left")
    } else {
        ("divide-right", "right")
    };
    let mut r = Report::new(name, json!({ "operator": src, key: factor }));
    r.operator(&l);
    r.field("quotient", d.quotient.to_string(), &d.quotient);
    r.field("remainder", d.remainder.to_string(), &d.remainder);
    r.field("exact", d.is_exact(), d.is_exact());
    Ok(r)
}

pub fn types(src: &str, only: Option<&str>) -> Outcome {
    let only = only.map(str::parse::<FactType>).transpose()?;
    let l = normalize_form1(&operator("operator", src)?)?;
    let inv = compute_invariants(&l)?;
    let mut r = Report::new("types", src);
    r.operator(&l);
    let shown: Vec<ConditionReport> = match only {
        Some(t) => vec![condition_residuals(&inv, t)],
        None => type_sweep(&inv),
    };
    let holding: Vec<&str> = shown.iter().filter(|c| c.holds).map(|c| c.label.as_str()).collect();
    r.field("holding", holding.clone(), format!("[{}]", holding.join(", ")));
    r.residuals(&shown);
    if let Some(t) = only {
        let holds = shown[0].holds;
        r.verdict(format!("{t} {}", if holds { "holds" } else { "fails" }), holds);
    }
    Ok(r)
}

pub fn triple(src: &str, left: &str, right: &str) -> Outcome {
    let l = operator("operator", src)?;
    let f1 = operator("left factor", left)?;
    let f2 = operator("right factor", right)?;
    let fac = construct_triple(&l, &f1, &f2)?;
    let mut r = Report::new("triple", json!({ "operator": src, "left": left, "right": right }));
    r.operator(&l);
    r.field("middle", fac.factors[1].to_string(), &fac.factors[1]);
    r.field("factors", factors_json(&fac), &fac);
    Ok(r)
}

pub fn order2_factor(src: &str, left: &str, right: &str) -> Outcome {
    let l = operator("operator", src)?;
    let s1 = linear_symbol("left factor", &operator("left factor", left)?)?;
    let s2 = linear_symbol("right factor", &operator("right factor", right)?)?;
    let res = solve_order2_coprime(&l, &s1, &s2)?;
    let mut r = Report::new(
        "order2-factor",
        json!({ "operator": src, "left": left, "right": right }),
    );
    r.operator(&l);
    match res {
        Some(fac) => {
            r.field("factors", factors_json(&fac), &fac);
            r.verdict("factorable", true);
        }
        None => {
            r.field("factors", Value::Null, "none");
            r.verdict(format!("no factorization with symbols ({s1})({s2})"), false);
        }
    }
    Ok(r)
}

pub fn reducible(src: &str, rights: &[String]) -> Outcome {
    if rights.is_empty() {
        return Err(CliError::Usage("reducible needs at least one --right factor".into()));
    }
    let l = operator("operator", src)?;
    let factors = rights
        .iter()
        .map(|f| operator("right factor", f))
        .collect::<Result<Vec<_>, _>>()?;
    let v = check_complete_reducibility(&l, &factors)?;
    let mut r = Report::new("reducible", json!({ "operator": src, "right": rights }));
    r.operator(&normalize_form1(&l)?);
    let checks: Vec<Value> = v
        .factors
        .iter()
        .map(|c| {
            json!({
                "factor": c.factor.to_string(),
                "pattern": c.pattern.map(|p| p.to_string()),
                "divides": c.divides,
                "irreducibility": format!("{:?}", c.irreducibility),
            })
        })
        .collect();
    r.field("factors", checks, format!("{} supplied", v.factors.len()));
    for c in &v.factors {
        let pat = c.pattern.map_or("?".into(), |p| p.to_string());
        r.note(format!(
            "  {} {} [{pat}] {:?}",
            mark(c.divides),
            c.factor,
            c.irreducibility
        ));
    }
    r.field("lcm", v.lcm.to_string(), &v.lcm);
    r.field("lcm_matches", v.lcm_matches, v.lcm_matches);
    r.field(
        "group",
        v.group.map(|g| g.to_string()),
        v.group.map_or("none".into(), |g| g.to_string()),
    );
    r.verdict(v.status.name(), v.status == ReducibilityStatus::CompletelyReducible);
    Ok(r)
}

pub fn groups(src: &str, only: Option<&str>) -> Outcome {
    let only = only.map(str::parse::<Group>).transpose()?;
    let l = normalize_form1(&operator("operator", src)?)?;
    let inv = compute_invariants(&l)?;
    let selected: Vec<Group> = only.map_or(Group::ALL.to_vec(), |g| vec![g]);
    let printed = selected
        .iter()
        .map(|&g| group_conditions(&inv, g))
        .collect::<Result<Vec<_>, _>>()?;
    let factor_based: Vec<ConditionReport> =
        selected.iter().map(|&g| right_factor_conditions(&inv, g)).collect();
    let mut r = Report::new("groups", src);
    r.operator(&l);
    let holding: Vec<&str> = printed.iter().filter(|c| c.holds).map(|c| c.label.as_str()).collect();
    r.field("holding", holding.clone(), format!("[{}]", holding.join(", ")));
    let by_factors: Vec<Value> = factor_based
        .iter()
        .map(|c| json!({ "group": c.label, "holds": c.holds }))
        .collect();
    let summary: Vec<String> =
        factor_based.iter().map(|c| format!("{} {}", mark(c.holds), c.label)).collect();
    r.field("right_factor_conditions", by_factors, summary.join("  "));
    r.residuals(&printed);
    if let Some(g) = only {
        let holds = printed[0].holds;
        r.verdict(format!("group {g} {}", if holds { "holds" } else { "fails" }), holds);
    }
    Ok(r)
}
