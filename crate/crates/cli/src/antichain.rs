//! Parsing of `--antichain` arguments: `s1,s3` or `[1,1,0],s2`.

use nilideal_core::{Antichain, Error, RootSet, RootSystem};

fn split_tokens(s: &str) -> Result<Vec<String>, String> {
    let mut out = Vec::new();
    let mut cur = String::new();
    let mut depth = 0;
    for c in s.chars() {
        match c {
            '[' => {
                depth += 1;
                cur.push(c);
            }
            ']' => {
                if depth == 0 {
                    return Err("unbalanced ']'".into());
                }
                depth -= 1;
                cur.push(c);
            }
            ',' if depth == 0 => out.push(std::mem::take(&mut cur)),
            c if c.is_whitespace() => {}
            c => cur.push(c),
        }
    }
    if depth != 0 {
        return Err("unbalanced '['".into());
    }
    out.push(cur);
    Ok(out.into_iter().filter(|t| !t.is_empty()).collect())
}

fn root_index(rs: &RootSystem, token: &str) -> Result<usize, String> {
    if let Some(k) = token.strip_prefix(['s', 'S']) {
        let k: usize = k
            .parse()
            .map_err(|_| format!("bad simple-root token {token:?}"))?;
        if k == 0 || k > rs.rank() {
            return Err(format!("simple root s{k} out of range 1..={}", rs.rank()));
        }
        return Ok(rs.simple_index(k - 1));
    }
    let inner = token
        .strip_prefix('[')
        .and_then(|t| t.strip_suffix(']'))
        .ok_or_else(|| format!("expected sK or [c1,...,cn], got {token:?}"))?;
    let coeffs = inner
        .split(',')
        .map(|c| c.trim().parse::<i64>())
        .collect::<Result<Vec<_>, _>>()
        .map_err(|_| format!("bad coefficient vector {token:?}"))?;
    if coeffs.len() != rs.rank() {
        return Err(format!(
            "vector {token} has {} entries, expected {}",
            coeffs.len(),
            rs.rank()
        ));
    }
    rs.index_of(&coeffs)
        .ok_or_else(|| format!("{token} is not a positive root of {}", rs.spec()))
}

pub fn parse<'a>(rs: &'a RootSystem, s: &str) -> Result<Antichain<'a>, String> {
    let set: RootSet = split_tokens(s)?
        .iter()
        .map(|t| root_index(rs, t))
        .collect::<Result<_, _>>()?;
    Antichain::new(rs, set).map_err(|e| match e {
        Error::NotAnAntichain(a, b) => format!(
            "not an antichain: {} and {} are comparable",
            rs.root(a).vector_string(),
            rs.root(b).vector_string()
        ),
        other => other.to_string(),
    })
}

#[cfg(test)]
mod tests {
    use nilideal_core::{Letter, TypeRank};

    use super::*;

    #[test]
    fn tokens() {
        let rs = RootSystem::build(TypeRank::new(Letter::A, 3).unwrap()).unwrap();
        assert_eq!(parse(&rs, "").unwrap().len(), 0);
        assert_eq!(parse(&rs, "s1, s3").unwrap().len(), 2);
        assert_eq!(parse(&rs, "[0,1,1],s1").unwrap().len(), 2);
        let err = parse(&rs, "s1,[1,1,0]").unwrap_err();
        assert!(err.contains("comparable"), "{err}");
        assert!(parse(&rs, "s4").is_err());
        assert!(parse(&rs, "[1,0,1]").is_err());
        assert!(parse(&rs, "[1,0").is_err());
    }
}
