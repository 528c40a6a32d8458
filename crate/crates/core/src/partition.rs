//! Brute-force partition enumeration and the statistics used as independent
//! oracles for the combinatorial identities.

use std::fmt;

use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::error::PartitionError;
use crate::rational::{int, pow, pow_signed, rat, Rational};
use crate::series::Series;

/// Default cap on the number of partitions enumerated for a single `n`.
pub const DEFAULT_BUDGET: u64 = 2_000_000;

/// Parts in weakly decreasing order. The empty partition is the only
/// partition of 0.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<u32>,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct PartitionStats {
    pub size: u32,
    pub smallest: u32,
    pub largest: u32,
    pub num_parts: u32,
    pub rank: i64,
    pub smallest_mult: u32,
    pub largest_mult: u32,
    pub num_distinct: u32,
    pub crank: i64,
}

impl Partition {
    /// Sorts the parts into weakly decreasing order. Zero parts are dropped.
    pub fn new(mut parts: Vec<u32>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn size(&self) -> u32 {
        self.parts.iter().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// All statistics at once; the empty partition has every field zero.
    pub fn stats(&self) -> PartitionStats {
        let Some((&largest, &smallest)) = self.parts.first().zip(self.parts.last()) else {
            return PartitionStats::default();
        };
        let num_parts = self.parts.len() as u32;
        let count = |v: u32| self.parts.iter().filter(|&&p| p == v).count() as u32;
        let num_distinct = 1 + self.parts.windows(2).filter(|w| w[0] != w[1]).count() as u32;
        PartitionStats {
            size: self.size(),
            smallest,
            largest,
            num_parts,
            rank: largest as i64 - num_parts as i64,
            smallest_mult: count(smallest),
            largest_mult: count(largest),
            num_distinct,
            crank: self.crank(),
        }
    }

    /// Andrews–Garvan crank: the largest part when there are no ones,
    /// otherwise (parts larger than the number of ones) minus (number of ones).
    pub fn crank(&self) -> i64 {
        let ones = self.parts.iter().filter(|&&p| p == 1).count() as i64;
        if ones == 0 {
            return self.parts.first().copied().unwrap_or(0) as i64;
        }
        let above = self.parts.iter().filter(|&&p| p as i64 > ones).count() as i64;
        above - ones
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return write!(f, "()");
        }
        let text: Vec<String> = self.parts.iter().map(u32::to_string).collect();
        write!(f, "{}", text.join("+"))
    }
}

/// Restricted partition classes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PartitionClass {
    /// Every partition.
    All,
    /// Distinct parts.
    Distinct,
    /// Distinct parts, each larger than the given bound.
    DistinctAbove(u32),
    /// Distinct parts except that the smallest part may repeat.
    SmallestRepeats,
    /// Distinct parts except that the largest part may repeat.
    LargestRepeats,
}

impl PartitionClass {
    pub fn contains(&self, p: &Partition) -> bool {
        let parts = p.parts();
        let strict = |w: &[u32]| w.windows(2).all(|w| w[0] > w[1]);
        match *self {
            PartitionClass::All => true,
            PartitionClass::Distinct => strict(parts),
            PartitionClass::DistinctAbove(k) => strict(parts) && parts.iter().all(|&x| x > k),
            PartitionClass::SmallestRepeats => match parts.last() {
                None => true,
                Some(&s) => {
                    let head = parts.iter().position(|&x| x == s).unwrap_or(0);
                    strict(&parts[..=head])
                }
            },
            PartitionClass::LargestRepeats => {
                let tail = parts.iter().rposition(|&x| Some(&x) == parts.first()).unwrap_or(0);
                strict(&parts[tail..])
            }
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct ClassSpec {
    pub class: PartitionClass,
    pub n: u32,
}

impl ClassSpec {
    pub fn new(class: PartitionClass, n: u32) -> Self {
        ClassSpec { class, n }
    }
}

/// Streaming enumeration of a partition class in descending lexicographic
/// order of the part lists.
pub fn enumerate(spec: ClassSpec) -> Partitions {
    Partitions::new(spec)
}

/// Depth-first enumerator; each stack slot holds the part chosen at that depth.
#[derive(Clone, Debug)]
pub struct Partitions {
    class: PartitionClass,
    n: u32,
    parts: Vec<u32>,
    remaining: u32,
    started: bool,
    done: bool,
}

impl Partitions {
    fn new(spec: ClassSpec) -> Self {
        Partitions {
            class: spec.class,
            n: spec.n,
            parts: Vec::new(),
            remaining: spec.n,
            started: false,
            done: false,
        }
    }

    /// Candidate range `lo..=hi` for the next part after the current prefix.
    fn bounds(&self) -> (u32, u32) {
        let r = self.remaining;
        let prev = self.parts.last().copied();
        match (self.class, prev) {
            (PartitionClass::All, p) => (1, p.unwrap_or(r).min(r)),
            (PartitionClass::Distinct, p) => (1, p.map_or(r, |p| p - 1).min(r)),
            (PartitionClass::DistinctAbove(k), p) => (k + 1, p.map_or(r, |p| p - 1).min(r)),
            (PartitionClass::SmallestRepeats, None) => (1, r),
            (PartitionClass::SmallestRepeats, Some(p)) => {
                if self.in_run() {
                    (p, p.min(r))
                } else {
                    (1, p.min(r))
                }
            }
            (PartitionClass::LargestRepeats, None) => (1, r),
            (PartitionClass::LargestRepeats, Some(p)) => {
                if self.parts.iter().all(|&x| x == p) {
                    (1, p.min(r))
                } else {
                    (1, (p - 1).min(r))
                }
            }
        }
    }

    fn in_run(&self) -> bool {
        let len = self.parts.len();
        len >= 2 && self.parts[len - 1] == self.parts[len - 2]
    }

    /// Whether choosing `c` next can still complete to a member of the class.
    fn feasible(&self, c: u32) -> bool {
        let rest = self.remaining - c;
        if rest == 0 {
            return true;
        }
        let prev = self.parts.last().copied();
        let distinct_below = |c: u32, floor: u32| -> bool {
            // largest total of distinct parts in floor+1..c
            if c <= floor + 1 {
                return false;
            }
            let hi = (c - 1) as u64;
            let lo = floor as u64;
            let cap = hi * (hi + 1) / 2 - lo * (lo + 1) / 2;
            rest as u64 >= (floor + 1) as u64 && rest as u64 <= cap
        };
        match self.class {
            PartitionClass::All => true,
            PartitionClass::Distinct => distinct_below(c, 0),
            PartitionClass::DistinctAbove(k) => distinct_below(c, k),
            PartitionClass::SmallestRepeats => {
                // after a repeat only more copies of c may follow; otherwise
                // the rest can always be finished with a run of ones
                prev != Some(c) || rest.is_multiple_of(c)
            }
            PartitionClass::LargestRepeats => {
                let run_open = prev.is_none_or(|p| p == c) && self.parts.iter().all(|&x| x == c);
                run_open || distinct_below(c, 0)
            }
        }
    }

    /// Tries candidates for the current depth starting at `start`, pushing the
    /// first feasible one. Returns false if none is left.
    fn push_from(&mut self, start: u32) -> bool {
        let (lo, _) = self.bounds();
        let mut c = start;
        while c >= lo && c >= 1 {
            if self.feasible(c) {
                self.parts.push(c);
                self.remaining -= c;
                return true;
            }
            c -= 1;
        }
        false
    }

    /// Descends greedily until the remainder is used up or a dead end is hit.
    fn descend(&mut self) -> bool {
        while self.remaining > 0 {
            let (lo, hi) = self.bounds();
            if hi < lo || !self.push_from(hi) {
                return false;
            }
        }
        true
    }

    /// Backtracks to the deepest slot that still has a smaller candidate.
    fn advance(&mut self) -> bool {
        while let Some(last) = self.parts.pop() {
            self.remaining += last;
            if last > 1 && self.push_from(last - 1) {
                if self.descend() {
                    return true;
                }
                // dead end below the new choice: keep backtracking from it
                continue;
            }
        }
        false
    }
}

impl Iterator for Partitions {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        if self.done {
            return None;
        }
        let found = if !self.started {
            self.started = true;
            if self.n == 0 {
                true
            } else {
                self.descend() || self.advance()
            }
        } else if self.n == 0 {
            false
        } else {
            self.advance()
        };
        if found {
            Some(Partition { parts: self.parts.clone() })
        } else {
            self.done = true;
            None
        }
    }
}

/// Calls `visit` on each member of the class, failing once more than
/// `budget` partitions have been produced.
pub fn for_each_bounded<F>(spec: ClassSpec, budget: u64, mut visit: F) -> Result<(), PartitionError>
where
    F: FnMut(&Partition) -> Result<(), PartitionError>,
{
    for (count, p) in enumerate(spec).enumerate() {
        if count as u64 >= budget {
            return Err(PartitionError::BudgetExceeded { n: spec.n as usize, budget });
        }
        visit(&p)?;
    }
    Ok(())
}

fn fold_stats<F>(class: PartitionClass, n: u32, f: F) -> u64
where
    F: Fn(&PartitionStats) -> u64,
{
    if n == 0 {
        return 0;
    }
    enumerate(ClassSpec::new(class, n)).map(|p| f(&p.stats())).sum()
}

/// `sum over distinct-part partitions of n of (-c)^(number of parts) * smallest part`.
pub fn ffw(n: u32, c: &Rational) -> Rational {
    let minus_c = -c;
    let mut total = Rational::zero();
    for p in enumerate(ClassSpec::new(PartitionClass::Distinct, n)) {
        if p.is_empty() {
            continue;
        }
        let s = p.stats();
        total += pow(&minus_c, s.num_parts as u64) * int(s.smallest as i64);
    }
    total
}

/// Total number of appearances of the smallest part over all partitions of `n`.
pub fn spt(n: u32) -> u64 {
    fold_stats(PartitionClass::All, n, |s| s.smallest_mult as u64)
}

/// Total number of appearances of the largest part over all partitions of `n`.
pub fn lpt(n: u32) -> u64 {
    fold_stats(PartitionClass::All, n, |s| s.largest_mult as u64)
}

/// Sum of the smallest part (counted once) over all partitions of `n`.
pub fn t_sum(n: u32) -> u64 {
    fold_stats(PartitionClass::All, n, |s| s.smallest as u64)
}

/// Partitions of `n` whose largest part appears an odd number of times.
pub fn l_odd(n: u32) -> u64 {
    fold_stats(PartitionClass::All, n, |s| (s.largest_mult % 2) as u64)
}

/// Partitions of `n` whose smallest part is odd.
pub fn s_odd(n: u32) -> u64 {
    fold_stats(PartitionClass::All, n, |s| (s.smallest % 2) as u64)
}

/// Number of divisors of `n`.
pub fn d_divisors(n: u32) -> u64 {
    (1..=n).filter(|&d| n.is_multiple_of(d)).count() as u64
}

/// Number of partitions of `n` into distinct parts.
pub fn d_distinct(n: u32) -> u64 {
    enumerate(ClassSpec::new(PartitionClass::Distinct, n)).count() as u64
}

/// `sum_{d | k} (-1)^(d-1)` for `k >= 1`, and `1/2` at `k = 0`.
pub fn sigma_prime(k: u32) -> Rational {
    if k == 0 {
        return rat(1, 2);
    }
    let v: i64 = (1..=k).filter(|&d| k.is_multiple_of(d)).map(|d| if d % 2 == 1 { 1 } else { -1 }).sum();
    int(v)
}

/// `sum_{m >= 1} m * M(m, n)`, the positive crank moment.
pub fn crank_moment(n: u32) -> u64 {
    if n == 0 {
        return 0;
    }
    enumerate(ClassSpec::new(PartitionClass::All, n))
        .map(|p| p.crank().max(0) as u64)
        .sum()
}

// ---------------------------------------------------------------------------
// Weight expressions

/// A weight built from partition statistics, integer/rational literals and
/// one optional parameter `c`, combined with `+ - *` and integer powers.
///
/// Examples: `(-1)^num_parts - (-1)^rank`, `(-c)^(smallest_mult-1)`,
/// `(-1)^(num_parts+1) * smallest`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightExpr {
    source: String,
    root: Node,
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Node {
    Lit(Rational),
    Param,
    Stat(StatField),
    Neg(Box<Node>),
    Add(Box<Node>, Box<Node>),
    Sub(Box<Node>, Box<Node>),
    Mul(Box<Node>, Box<Node>),
    Pow(Box<Node>, Box<Node>),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StatField {
    Size,
    Smallest,
    Largest,
    NumParts,
    Rank,
    SmallestMult,
    LargestMult,
    NumDistinct,
    Crank,
}

impl StatField {
    pub const ALL: [(&'static str, StatField); 9] = [
        ("size", StatField::Size),
        ("smallest", StatField::Smallest),
        ("largest", StatField::Largest),
        ("num_parts", StatField::NumParts),
        ("rank", StatField::Rank),
        ("smallest_mult", StatField::SmallestMult),
        ("largest_mult", StatField::LargestMult),
        ("num_distinct", StatField::NumDistinct),
        ("crank", StatField::Crank),
    ];

    fn read(self, s: &PartitionStats) -> i64 {
        match self {
            StatField::Size => s.size as i64,
            StatField::Smallest => s.smallest as i64,
            StatField::Largest => s.largest as i64,
            StatField::NumParts => s.num_parts as i64,
            StatField::Rank => s.rank,
            StatField::SmallestMult => s.smallest_mult as i64,
            StatField::LargestMult => s.largest_mult as i64,
            StatField::NumDistinct => s.num_distinct as i64,
            StatField::Crank => s.crank,
        }
    }
}

impl WeightExpr {
    pub fn parse(source: &str) -> Result<Self, PartitionError> {
        let tokens = tokenize(source)?;
        let mut parser = Parser { tokens: &tokens, pos: 0 };
        let root = parser.expr()?;
        if parser.pos != tokens.len() {
            return Err(PartitionError::WeightSpec(format!("unexpected trailing input in {source:?}")));
        }
        Ok(WeightExpr { source: source.to_string(), root })
    }

    pub fn source(&self) -> &str {
        &self.source
    }

    /// Evaluates at one partition, with `c` bound to the parameter if used.
    pub fn eval(&self, stats: &PartitionStats, c: Option<&Rational>) -> Result<Rational, PartitionError> {
        eval_node(&self.root, stats, c, &self.source)
    }
}

fn eval_node(node: &Node, s: &PartitionStats, c: Option<&Rational>, src: &str) -> Result<Rational, PartitionError> {
    Ok(match node {
        Node::Lit(r) => r.clone(),
        Node::Param => c
            .cloned()
            .ok_or_else(|| PartitionError::WeightSpec(format!("{src:?} uses c but no value was given")))?,
        Node::Stat(f) => int(f.read(s)),
        Node::Neg(a) => -eval_node(a, s, c, src)?,
        Node::Add(a, b) => eval_node(a, s, c, src)? + eval_node(b, s, c, src)?,
        Node::Sub(a, b) => eval_node(a, s, c, src)? - eval_node(b, s, c, src)?,
        Node::Mul(a, b) => eval_node(a, s, c, src)? * eval_node(b, s, c, src)?,
        Node::Pow(a, b) => {
            let base = eval_node(a, s, c, src)?;
            let e = eval_node(b, s, c, src)?;
            if !e.is_integer() {
                return Err(PartitionError::WeightSpec(format!("non-integer exponent in {src:?}")));
            }
            let e: i64 = e
                .to_integer()
                .try_into()
                .map_err(|_| PartitionError::WeightSpec(format!("exponent out of range in {src:?}")))?;
            pow_signed(&base, e).ok_or_else(|| PartitionError::WeightUndefined(src.to_string()))?
        }
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Token {
    Num(u64),
    Ident(String),
    Sym(char),
}

fn tokenize(src: &str) -> Result<Vec<Token>, PartitionError> {
    let mut out = Vec::new();
    let mut chars = src.chars().peekable();
    while let Some(&ch) = chars.peek() {
        if ch.is_whitespace() {
            chars.next();
        } else if ch.is_ascii_digit() {
            let mut v: u64 = 0;
            while let Some(d) = chars.peek().and_then(|c| c.to_digit(10)) {
                v = v
                    .checked_mul(10)
                    .and_then(|v| v.checked_add(d as u64))
                    .ok_or_else(|| PartitionError::WeightSpec(format!("number too large in {src:?}")))?;
                chars.next();
            }
            out.push(Token::Num(v));
        } else if ch.is_ascii_alphabetic() || ch == '_' {
            let mut name = String::new();
            while let Some(&c) = chars.peek() {
                if c.is_ascii_alphanumeric() || c == '_' {
                    name.push(c);
                    chars.next();
                } else {
                    break;
                }
            }
            out.push(Token::Ident(name));
        } else if "+-*/^()".contains(ch) {
            out.push(Token::Sym(ch));
            chars.next();
        } else {
            return Err(PartitionError::WeightSpec(format!("unexpected character {ch:?} in {src:?}")));
        }
    }
    Ok(out)
}

struct Parser<'a> {
    tokens: &'a [Token],
    pos: usize,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos)
    }

    fn eat(&mut self, ch: char) -> bool {
        if self.peek() == Some(&Token::Sym(ch)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn err(&self, what: &str) -> PartitionError {
        PartitionError::WeightSpec(format!("{what} at token {}", self.pos))
    }

    fn expr(&mut self) -> Result<Node, PartitionError> {
        let mut lhs = self.term()?;
        loop {
            if self.eat('+') {
                lhs = Node::Add(Box::new(lhs), Box::new(self.term()?));
            } else if self.eat('-') {
                lhs = Node::Sub(Box::new(lhs), Box::new(self.term()?));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn term(&mut self) -> Result<Node, PartitionError> {
        let mut lhs = self.unary()?;
        while self.eat('*') {
            lhs = Node::Mul(Box::new(lhs), Box::new(self.unary()?));
        }
        Ok(lhs)
    }

    fn unary(&mut self) -> Result<Node, PartitionError> {
        if self.eat('-') {
            return Ok(Node::Neg(Box::new(self.unary()?)));
        }
        self.power()
    }

    fn power(&mut self) -> Result<Node, PartitionError> {
        let base = self.atom()?;
        if self.eat('^') {
            // right-associative; the exponent may carry its own sign
            let exp = self.unary()?;
            return Ok(Node::Pow(Box::new(base), Box::new(exp)));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Node, PartitionError> {
        match self.peek().cloned() {
            Some(Token::Num(v)) => {
                self.pos += 1;
                if self.eat('/') {
                    match self.peek().cloned() {
                        Some(Token::Num(d)) if d != 0 => {
                            self.pos += 1;
                            Ok(Node::Lit(Rational::new(v.into(), d.into())))
                        }
                        _ => Err(self.err("expected a nonzero denominator")),
                    }
                } else {
                    Ok(Node::Lit(Rational::from_integer(v.into())))
                }
            }
            Some(Token::Ident(name)) => {
                self.pos += 1;
                if name == "c" {
                    return Ok(Node::Param);
                }
                StatField::ALL
                    .iter()
                    .find(|(n, _)| *n == name)
                    .map(|&(_, f)| Node::Stat(f))
                    .ok_or_else(|| PartitionError::WeightSpec(format!("unknown statistic {name:?}")))
            }
            Some(Token::Sym('(')) => {
                self.pos += 1;
                let inner = self.expr()?;
                if !self.eat(')') {
                    return Err(self.err("expected ')'"));
                }
                Ok(inner)
            }
            _ => Err(self.err("expected a number, statistic, c or '('")),
        }
    }
}

/// `sum over the class of weight(pi)`; the empty partition is never counted.
pub fn weighted_sum(spec: ClassSpec, weight: &WeightExpr, c: Option<&Rational>) -> Result<Rational, PartitionError> {
    weighted_sum_bounded(spec, weight, c, DEFAULT_BUDGET)
}

pub fn weighted_sum_bounded(
    spec: ClassSpec,
    weight: &WeightExpr,
    c: Option<&Rational>,
    budget: u64,
) -> Result<Rational, PartitionError> {
    let mut total = Rational::zero();
    for_each_bounded(spec, budget, |p| {
        if !p.is_empty() {
            total += weight.eval(&p.stats(), c)?;
        }
        Ok(())
    })?;
    Ok(total)
}

/// Statistics with an enumeration-backed generating function.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GenStat {
    /// `FFW_c(n)`; needs `c`.
    FfwC,
    Spt,
    Lpt,
    TSum,
    LOdd,
    SOdd,
    /// `sum_{m>=1} m M(m,n)`.
    CrankMoment,
    /// Number of members of a class; the only statistic counting `n = 0`.
    ClassCount(PartitionClass),
}

impl GenStat {
    pub fn parse(name: &str) -> Option<GenStat> {
        Some(match name {
            "ffw" | "ffw_c" => GenStat::FfwC,
            "spt" => GenStat::Spt,
            "lpt" => GenStat::Lpt,
            "t_sum" => GenStat::TSum,
            "l_odd" => GenStat::LOdd,
            "s_odd" => GenStat::SOdd,
            "crank_moment" | "crank-moment" => GenStat::CrankMoment,
            "count_p" => GenStat::ClassCount(PartitionClass::All),
            "count_d" => GenStat::ClassCount(PartitionClass::Distinct),
            "count_b" => GenStat::ClassCount(PartitionClass::SmallestRepeats),
            "count_b_prime" => GenStat::ClassCount(PartitionClass::LargestRepeats),
            _ => return None,
        })
    }

    pub const NAMES: [&'static str; 11] = [
        "ffw_c",
        "spt",
        "lpt",
        "t_sum",
        "l_odd",
        "s_odd",
        "crank_moment",
        "count_p",
        "count_d",
        "count_b",
        "count_b_prime",
    ];
}

/// `sum_n stat(n) q^n` up to `order`, computed purely by enumeration.
pub fn generating_series(stat: GenStat, c: Option<&Rational>, order: usize, budget: u64) -> Result<Series, PartitionError> {
    let c_value = match (stat, c) {
        (GenStat::FfwC, None) => {
            return Err(PartitionError::WeightSpec("ffw_c needs a value for c".to_string()))
        }
        (_, c) => c.cloned().unwrap_or_else(Rational::one),
    };
    let coeffs: Result<Vec<Rational>, PartitionError> = (0..=order)
        .into_par_iter()
        .map(|n| stat_coefficient(stat, &c_value, n as u32, budget))
        .collect();
    Ok(Series::make(order, coeffs?).expect("one coefficient per exponent"))
}

/// Generating function of an arbitrary weight over a class, `n >= 1`.
pub fn weighted_series(
    class: PartitionClass,
    weight: &WeightExpr,
    c: Option<&Rational>,
    order: usize,
    budget: u64,
) -> Result<Series, PartitionError> {
    let coeffs: Result<Vec<Rational>, PartitionError> = (0..=order)
        .into_par_iter()
        .map(|n| weighted_sum_bounded(ClassSpec::new(class, n as u32), weight, c, budget))
        .collect();
    Ok(Series::make(order, coeffs?).expect("one coefficient per exponent"))
}

/// Like [`weighted_series`], with the weight given as a function of the statistics.
pub fn weighted_series_with<F>(class: PartitionClass, order: usize, budget: u64, weight: F) -> Result<Series, PartitionError>
where
    F: Fn(&PartitionStats) -> Rational + Sync,
{
    let coeffs: Result<Vec<Rational>, PartitionError> = (0..=order)
        .into_par_iter()
        .map(|n| {
            let mut total = Rational::zero();
            for_each_bounded(ClassSpec::new(class, n as u32), budget, |p| {
                if !p.is_empty() {
                    total += weight(&p.stats());
                }
                Ok(())
            })?;
            Ok(total)
        })
        .collect();
    Ok(Series::make(order, coeffs?).expect("one coefficient per exponent"))
}

fn stat_coefficient(stat: GenStat, c: &Rational, n: u32, budget: u64) -> Result<Rational, PartitionError> {
    let class = match stat {
        GenStat::FfwC => PartitionClass::Distinct,
        GenStat::ClassCount(class) => class,
        _ => PartitionClass::All,
    };
    let minus_c = -c;
    let mut total = Rational::zero();
    let mut count = 0u64;
    for_each_bounded(ClassSpec::new(class, n), budget, |p| {
        if p.is_empty() {
            count += matches!(stat, GenStat::ClassCount(_)) as u64;
            return Ok(());
        }
        let s = p.stats();
        match stat {
            GenStat::FfwC => {
                total += pow(&minus_c, s.num_parts as u64) * int(s.smallest as i64)
            }
            GenStat::Spt => count += s.smallest_mult as u64,
            GenStat::Lpt => count += s.largest_mult as u64,
            GenStat::TSum => count += s.smallest as u64,
            GenStat::LOdd => count += (s.largest_mult % 2) as u64,
            GenStat::SOdd => count += (s.smallest % 2) as u64,
            GenStat::CrankMoment => count += s.crank.max(0) as u64,
            GenStat::ClassCount(_) => count += 1,
        }
        Ok(())
    })?;
    Ok(total + Rational::from_integer(count.into()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn list(class: PartitionClass, n: u32) -> Vec<Vec<u32>> {
        enumerate(ClassSpec::new(class, n)).map(|p| p.parts().to_vec()).collect()
    }

    #[test]
    fn small_classes() {
        assert_eq!(list(PartitionClass::Distinct, 3), vec![vec![3], vec![2, 1]]);
        assert_eq!(list(PartitionClass::SmallestRepeats, 3), vec![vec![3], vec![2, 1], vec![1, 1, 1]]);
        assert_eq!(list(PartitionClass::DistinctAbove(1), 4), vec![vec![4]]);
        assert_eq!(
            list(PartitionClass::All, 4),
            vec![vec![4], vec![3, 1], vec![2, 2], vec![2, 1, 1], vec![1, 1, 1, 1]]
        );
        assert_eq!(list(PartitionClass::LargestRepeats, 4), vec![vec![4], vec![3, 1], vec![2, 2], vec![1, 1, 1, 1]]);
        assert_eq!(list(PartitionClass::All, 0), vec![Vec::<u32>::new()]);
        assert_eq!(list(PartitionClass::DistinctAbove(3), 2), Vec::<Vec<u32>>::new());
    }

    #[test]
    fn enumeration_agrees_with_membership_filter() {
        let classes = [
            PartitionClass::Distinct,
            PartitionClass::DistinctAbove(2),
            PartitionClass::SmallestRepeats,
            PartitionClass::LargestRepeats,
        ];
        for n in 0..=18 {
            let all: Vec<Partition> = enumerate(ClassSpec::new(PartitionClass::All, n)).collect();
            let mut sorted = all.clone();
            sorted.sort_by(|a, b| b.parts().cmp(a.parts()));
            assert_eq!(all, sorted, "descending order at n={n}");
            for class in classes {
                let filtered: Vec<&Partition> = all.iter().filter(|p| class.contains(p)).collect();
                let direct: Vec<Partition> = enumerate(ClassSpec::new(class, n)).collect();
                assert_eq!(direct.iter().collect::<Vec<_>>(), filtered, "{class:?} at n={n}");
            }
        }
    }

    #[test]
    fn statistics() {
        let p = Partition::new(vec![2, 1]);
        assert_eq!(p.stats().rank, 0);
        let ones = Partition::new(vec![1, 1, 1]);
        assert_eq!((ones.stats().smallest_mult, ones.stats().largest_mult), (3, 3));
        let s = Partition::new(vec![1, 3, 5, 3]).stats();
        assert_eq!((s.rank, s.smallest_mult, s.num_distinct), (1, 1, 3));
        assert_eq!(Partition::empty().stats(), PartitionStats::default());
        assert_eq!(p.to_string(), "2+1");
    }

    #[test]
    fn cranks() {
        assert_eq!(Partition::new(vec![2, 2]).crank(), 2);
        assert_eq!(Partition::new(vec![3, 1]).crank(), 0);
        assert_eq!(Partition::new(vec![1, 1, 1, 1]).crank(), -4);
        let cranks: Vec<i64> = enumerate(ClassSpec::new(PartitionClass::All, 4)).map(|p| p.crank()).collect();
        assert_eq!(cranks, vec![4, 0, 2, -2, -4]);
        assert_eq!(crank_moment(4), 6);
    }

    #[test]
    fn counting_functions() {
        assert_eq!(ffw(6, &int(1)), int(-4));
        assert_eq!(ffw(4, &int(1)), int(-3));
        assert_eq!(ffw(1, &rat(3, 2)), rat(-3, 2));
        assert_eq!((lpt(4), t_sum(4)), (9, 9));
        assert_eq!((l_odd(3), s_odd(3)), (3, 3));
        assert_eq!(spt(1), 1);
        assert_eq!((d_divisors(6), d_distinct(6)), (4, 4));
        assert_eq!(sigma_prime(0), rat(1, 2));
        assert_eq!(sigma_prime(4), int(-1));
        assert_eq!(sigma_prime(6), int(0));
    }

    #[test]
    fn weights() {
        let w = WeightExpr::parse("(-1)^num_parts - (-1)^rank").unwrap();
        let lhs = weighted_sum(ClassSpec::new(PartitionClass::Distinct, 3), &w, None).unwrap();
        let b = WeightExpr::parse("2*(-1)^num_parts").unwrap();
        let rhs = weighted_sum(ClassSpec::new(PartitionClass::SmallestRepeats, 3), &b, None).unwrap();
        assert_eq!((lhs.clone(), rhs), (int(-2), int(-2)));
        let single = WeightExpr::parse("(-1)^num_parts").unwrap();
        assert_eq!(weighted_sum(ClassSpec::new(PartitionClass::Distinct, 1), &single, None).unwrap(), int(-1));
        // (-c)^(smallest_mult-1) at c = -2 is 2^(smallest_mult-1): 1 + 1 + 4
        let mult = WeightExpr::parse("(-c)^(smallest_mult-1)").unwrap();
        let v = weighted_sum(ClassSpec::new(PartitionClass::SmallestRepeats, 3), &mult, Some(&int(-2))).unwrap();
        assert_eq!(v, int(6));
        assert!(WeightExpr::parse("(-1)^bogus").is_err());
        assert!(WeightExpr::parse("2 +").is_err());
        let zero_neg = WeightExpr::parse("0^(-1)").unwrap();
        assert!(weighted_sum(ClassSpec::new(PartitionClass::All, 2), &zero_neg, None).is_err());
        assert_eq!(WeightExpr::parse("1/2").unwrap().eval(&PartitionStats::default(), None).unwrap(), rat(1, 2));
    }

    #[test]
    fn generating_functions() {
        let d = generating_series(GenStat::ClassCount(PartitionClass::Distinct), None, 6, DEFAULT_BUDGET).unwrap();
        assert_eq!(d, Series::from_ints(6, &[1, 1, 1, 2, 2, 3, 4]).unwrap());
        let s = generating_series(GenStat::Spt, None, 3, DEFAULT_BUDGET).unwrap();
        assert_eq!(s, Series::from_ints(3, &[0, 1, 3, 5]).unwrap());
        let crank = generating_series(GenStat::CrankMoment, None, 4, DEFAULT_BUDGET).unwrap();
        assert_eq!(crank.coeff(4), &int(6));
        assert!(matches!(
            generating_series(GenStat::Spt, None, 12, 10),
            Err(PartitionError::BudgetExceeded { .. })
        ));
        assert!(generating_series(GenStat::FfwC, None, 3, DEFAULT_BUDGET).is_err());
    }

    #[test]
    fn distinct_partitions_of_one_hundred() {
        assert_eq!(d_distinct(100), 444_793);
    }
}
