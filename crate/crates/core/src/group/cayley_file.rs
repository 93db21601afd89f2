//! Text format: `order N`, then `N` rows of `N` whitespace-separated indices,
//! then optional `label i name` lines. Blank lines and `#` comments are ignored.

use std::fmt::Write;

use super::{FiniteGroup, GroupMeta};
use crate::error::{Error, Result};

pub fn parse_cayley(text: &str) -> Result<FiniteGroup> {
    let mut lines =
        text.lines().enumerate().map(|(i, l)| (i + 1, l.trim())).filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let (ln, header) = lines.next().ok_or_else(|| Error::Parse("empty Cayley file".into()))?;
    let order: usize = match header.split_whitespace().collect::<Vec<_>>().as_slice() {
        ["order", n] => n.parse().map_err(|_| Error::Parse(format!("line {ln}: bad order {n:?}")))?,
        _ => return Err(Error::Parse(format!("line {ln}: expected `order N`"))),
    };
    if order == 0 || order > super::presentations::MAX_TABLE_ORDER {
        return Err(Error::Parse(format!("line {ln}: unsupported order {order}")));
    }
    let mut table = Vec::with_capacity(order);
    for _ in 0..order {
        let (ln, row) = lines.next().ok_or_else(|| Error::Parse(format!("expected {order} table rows")))?;
        let parsed: Vec<usize> = row
            .split_whitespace()
            .map(|x| x.parse().map_err(|_| Error::Parse(format!("line {ln}: bad index {x:?}"))))
            .collect::<Result<_>>()?;
        table.push(parsed);
    }
    let mut labels: Option<Vec<String>> = None;
    for (ln, l) in lines {
        let mut parts = l.splitn(3, char::is_whitespace);
        match (parts.next(), parts.next(), parts.next()) {
            (Some("label"), Some(i), Some(name)) => {
                let i: usize = i.parse().map_err(|_| Error::Parse(format!("line {ln}: bad label index")))?;
                if i >= order {
                    return Err(Error::Parse(format!("line {ln}: label index {i} out of range")));
                }
                let labels = labels.get_or_insert_with(|| (0..order).map(|g| format!("g{g}")).collect());
                labels[i] = name.trim().to_string();
            }
            _ => return Err(Error::Parse(format!("line {ln}: unexpected content {l:?}"))),
        }
    }
    let g = FiniteGroup::from_table(&table)?.with_meta(GroupMeta::File);
    Ok(match labels {
        Some(l) => g.with_labels(l),
        None => g,
    })
}

pub fn write_cayley(g: &FiniteGroup) -> String {
    let mut out = String::new();
    writeln!(out, "order {}", g.order()).unwrap();
    for a in g.elements() {
        let row: Vec<String> = g.elements().map(|b| g.mul(a, b).to_string()).collect();
        writeln!(out, "{}", row.join(" ")).unwrap();
    }
    if let Some(labels) = g.labels() {
        for (i, l) in labels.iter().enumerate() {
            writeln!(out, "label {i} {l}").unwrap();
        }
    }
    out
}
