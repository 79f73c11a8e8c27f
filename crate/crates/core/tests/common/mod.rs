//! Brute-force reference implementations over plain strings. They share no
//! code with the library.

#![allow(dead_code)]

/// Leftmost square, ties broken by shorter half-length, by direct comparison
/// of every (start, half-length) pair.
pub fn find_square(w: &str) -> Option<(usize, usize)> {
    let b = w.as_bytes();
    let n = b.len();
    for s in 0..n {
        for h in 1..=(n - s) / 2 {
            if b[s..s + h] == b[s + h..s + 2 * h] {
                return Some((s, h));
            }
        }
    }
    None
}

pub fn is_square_free(w: &str) -> bool {
    find_square(w).is_none()
}

pub fn delete(w: &str, start: usize, len: usize) -> String {
    format!("{}{}", &w[..start], &w[start + len..])
}

/// Square-free and no interior length-k factor is disposable.
pub fn is_k_irreducible(w: &str, k: usize) -> bool {
    is_square_free(w) && (1..w.len().saturating_sub(k)).all(|s| !is_square_free(&delete(w, s, k)))
}

pub fn is_irreducible(w: &str) -> bool {
    is_k_irreducible(w, 1)
}

/// All words of length n over {0,1,2} in lexicographic order.
pub fn all_words(n: usize) -> impl Iterator<Item = String> {
    let total = 3usize.pow(n as u32);
    (0..total).map(move |mut code| {
        let mut digits = vec![b'0'; n];
        for d in digits.iter_mut().rev() {
            *d = b'0' + (code % 3) as u8;
            code /= 3;
        }
        String::from_utf8(digits).unwrap()
    })
}

pub fn all_square_free(n: usize) -> Vec<String> {
    all_words(n).filter(|w| is_square_free(w)).collect()
}

/// The twelve images under letter permutations and reversal.
pub fn orbit(w: &str) -> Vec<String> {
    let perms = ["012", "021", "102", "120", "201", "210"];
    let mut out = Vec::new();
    for p in perms {
        let p = p.as_bytes();
        let mapped: String = w.bytes().map(|c| p[(c - b'0') as usize] as char).collect();
        out.push(mapped.chars().rev().collect());
        out.push(mapped);
    }
    out
}

pub fn canonical(w: &str) -> String {
    orbit(w).into_iter().min().unwrap()
}

pub fn apply(images: [&str; 3], w: &str) -> String {
    w.bytes().map(|c| images[(c - b'0') as usize]).collect()
}

/// Fixed point prefix by repeated application from the seed.
pub fn fixed_point(images: [&str; 3], seed: char, len: usize) -> String {
    let mut w = seed.to_string();
    while w.len() < len {
        w = apply(images, &w);
    }
    w[..len].to_string()
}

/// Every (b, c, a, offset) where images[a] occurs in images[b]images[c] other
/// than flush left with a = b or flush right with a = c.
pub fn misaligned(images: [&str; 3]) -> Vec<(usize, usize, usize, usize)> {
    let mut out = Vec::new();
    for b in 0..3 {
        for c in 0..3 {
            let pair = format!("{}{}", images[b], images[c]);
            for (a, x) in images.iter().enumerate() {
                let mut from = 0;
                while let Some(pos) = pair[from..].find(x) {
                    let o = from + pos;
                    let left = o == 0 && a == b;
                    let right = o + x.len() == pair.len() && a == c;
                    if !left && !right {
                        out.push((b, c, a, o));
                    }
                    from = o + 1;
                }
            }
        }
    }
    out
}

pub const PHI: [&str; 3] = [
    "01202120102120210",
    "12010201210201021",
    "20121012021012102",
];
pub const TAU: [&str; 3] = ["012", "02", "1"];
