//! Porter (1980) suffix-stripping stemmer.
//!
//! Ported from the reference implementation published by Martin Porter
//! (<https://tartarus.org/martin/PorterStemmer/>). The stemmer operates on
//! lowercase ASCII letters; words containing anything else are returned
//! unchanged, as are words of length <= 2.

struct Stemmer {
    buf: Vec<u8>,
    /// Current word length; the live word is `buf[..k]`.
    k: usize,
    /// General offset set by `ends_with`, start of the candidate suffix.
    j: usize,
}

impl Stemmer {
    fn new(word: &str) -> Stemmer {
        Stemmer {
            buf: word.as_bytes().to_vec(),
            k: word.len(),
            j: 0,
        }
    }

    fn is_consonant(&self, i: usize) -> bool {
        match self.buf[i] {
            b'a' | b'e' | b'i' | b'o' | b'u' => false,
            b'y' => i == 0 || !self.is_consonant(i - 1),
            _ => true,
        }
    }

    /// The measure m: number of vowel-consonant sequences in `buf[..j]`.
    fn measure(&self) -> usize {
        let mut i = 0;
        let mut n = 0;
        while i < self.j && self.is_consonant(i) {
            i += 1;
        }
        loop {
            while i < self.j && !self.is_consonant(i) {
                i += 1;
            }
            if i >= self.j {
                return n;
            }
            n += 1;
            while i < self.j && self.is_consonant(i) {
                i += 1;
            }
            if i >= self.j {
                return n;
            }
        }
    }

    fn has_vowel(&self) -> bool {
        (0..self.j).any(|i| !self.is_consonant(i))
    }

    /// buf[i-1..=i] is a double consonant.
    fn double_consonant(&self, i: usize) -> bool {
        i >= 1 && self.buf[i] == self.buf[i - 1] && self.is_consonant(i)
    }

    /// buf[i-2..=i] is consonant-vowel-consonant and the final consonant is
    /// not w, x or y. Used to restore a trailing e (e.g. hop -> hoping).
    fn cvc(&self, i: usize) -> bool {
        if i < 2 || !self.is_consonant(i) || self.is_consonant(i - 1) || !self.is_consonant(i - 2) {
            return false;
        }
        !matches!(self.buf[i], b'w' | b'x' | b'y')
    }

    fn ends_with(&mut self, s: &str) -> bool {
        let suffix = s.as_bytes();
        if suffix.len() > self.k {
            return false;
        }
        if &self.buf[self.k - suffix.len()..self.k] == suffix {
            self.j = self.k - suffix.len();
            true
        } else {
            false
        }
    }

    /// Replace the suffix at `j..k` with `s`.
    fn set_to(&mut self, s: &str) {
        let bytes = s.as_bytes();
        self.buf.truncate(self.j);
        self.buf.extend_from_slice(bytes);
        self.k = self.j + bytes.len();
    }

    fn replace_if_measure(&mut self, s: &str) {
        if self.measure() > 0 {
            self.set_to(s);
        }
    }

    /// Plurals and -ed / -ing: caresses -> caress, ponies -> poni,
    /// motoring -> motor, conflated -> conflate.
    fn step1ab(&mut self) {
        if self.buf[self.k - 1] == b's' {
            if self.ends_with("sses") {
                self.k -= 2;
            } else if self.ends_with("ies") {
                self.set_to("i");
            } else if self.buf[self.k - 2] != b's' {
                self.k -= 1;
            }
        }
        if self.ends_with("eed") {
            if self.measure() > 0 {
                self.k -= 1;
            }
        } else if (self.ends_with("ed") || self.ends_with("ing")) && self.has_vowel() {
            self.k = self.j;
            if self.ends_with("at") {
                self.set_to("ate");
            } else if self.ends_with("bl") {
                self.set_to("ble");
            } else if self.ends_with("iz") {
                self.set_to("ize");
            } else if self.double_consonant(self.k - 1) {
                if !matches!(self.buf[self.k - 2], b'l' | b's' | b'z') {
                    self.k -= 1;
                }
            } else if self.measure() == 1 && self.cvc(self.k - 1) {
                self.j = self.k;
                self.set_to("e");
            }
        }
    }

    /// Terminal y -> i when the stem contains another vowel.
    fn step1c(&mut self) {
        if self.ends_with("y") && self.has_vowel() {
            self.buf[self.k - 1] = b'i';
        }
    }

    fn step2(&mut self) {
        if self.k < 2 {
            return;
        }
        match self.buf[self.k - 2] {
            b'a' => {
                if self.ends_with("ational") {
                    self.replace_if_measure("ate");
                } else if self.ends_with("tional") {
                    self.replace_if_measure("tion");
                }
            }
            b'c' => {
                if self.ends_with("enci") {
                    self.replace_if_measure("ence");
                } else if self.ends_with("anci") {
                    self.replace_if_measure("ance");
                }
            }
            b'e' => {
                if self.ends_with("izer") {
                    self.replace_if_measure("ize");
                }
            }
            b'l' => {
                if self.ends_with("abli") {
                    self.replace_if_measure("able");
                } else if self.ends_with("alli") {
                    self.replace_if_measure("al");
                } else if self.ends_with("entli") {
                    self.replace_if_measure("ent");
                } else if self.ends_with("eli") {
                    self.replace_if_measure("e");
                } else if self.ends_with("ousli") {
                    self.replace_if_measure("ous");
                }
            }
            b'o' => {
                if self.ends_with("ization") {
                    self.replace_if_measure("ize");
                } else if self.ends_with("ation") || self.ends_with("ator") {
                    self.replace_if_measure("ate");
                }
            }
            b's' => {
                if self.ends_with("alism") {
                    self.replace_if_measure("al");
                } else if self.ends_with("iveness") {
                    self.replace_if_measure("ive");
                } else if self.ends_with("fulness") {
                    self.replace_if_measure("ful");
                } else if self.ends_with("ousness") {
                    self.replace_if_measure("ous");
                }
            }
            b't' => {
                if self.ends_with("aliti") {
                    self.replace_if_measure("al");
                } else if self.ends_with("iviti") {
                    self.replace_if_measure("ive");
                } else if self.ends_with("biliti") {
                    self.replace_if_measure("ble");
                }
            }
            _ => {}
        }
    }

    fn step3(&mut self) {
        let last = self.buf[self.k - 1];
        match last {
            b'e' => {
                if self.ends_with("icate") {
                    self.replace_if_measure("ic");
                } else if self.ends_with("ative") {
                    self.replace_if_measure("");
                } else if self.ends_with("alize") {
                    self.replace_if_measure("al");
                }
            }
            b'i' => {
                if self.ends_with("iciti") {
                    self.replace_if_measure("ic");
                }
            }
            b'l' => {
                if self.ends_with("ical") {
                    self.replace_if_measure("ic");
                } else if self.ends_with("ful") {
                    self.replace_if_measure("");
                }
            }
            b's' if self.ends_with("ness") => self.replace_if_measure(""),
            _ => {}
        }
    }

    /// Drop -ance, -ence, -ment, ... when the remaining stem has m > 1.
    fn step4(&mut self) {
        if self.k < 2 {
            return;
        }
        let matched = match self.buf[self.k - 2] {
            b'a' => self.ends_with("al"),
            b'c' => self.ends_with("ance") || self.ends_with("ence"),
            b'e' => self.ends_with("er"),
            b'i' => self.ends_with("ic"),
            b'l' => self.ends_with("able") || self.ends_with("ible"),
            b'n' => {
                self.ends_with("ant")
                    || self.ends_with("ement")
                    || self.ends_with("ment")
                    || self.ends_with("ent")
            }
            b'o' => {
                (self.ends_with("ion")
                    && self.j >= 1
                    && matches!(self.buf[self.j - 1], b's' | b't'))
                    || self.ends_with("ou")
            }
            b's' => self.ends_with("ism"),
            b't' => self.ends_with("ate") || self.ends_with("iti"),
            b'u' => self.ends_with("ous"),
            b'v' => self.ends_with("ive"),
            b'z' => self.ends_with("ize"),
            _ => false,
        };
        if matched && self.measure() > 1 {
            self.k = self.j;
        }
    }

    /// Tidy up: drop a final e (probate -> probat) and reduce -ll.
    fn step5(&mut self) {
        self.j = self.k;
        if self.buf[self.k - 1] == b'e' {
            let m = self.measure();
            if m > 1 || (m == 1 && !self.cvc(self.k - 2)) {
                self.k -= 1;
            }
        }
        if self.buf[self.k - 1] == b'l' && self.double_consonant(self.k - 1) && self.measure() > 1 {
            self.k -= 1;
        }
    }

    fn into_stem(mut self) -> String {
        self.buf.truncate(self.k);
        String::from_utf8(self.buf).expect("stemmer operates on ASCII")
    }
}

/// Stem a lowercase word with the Porter algorithm.
///
/// Words shorter than three letters or containing non-ASCII-letter
/// characters pass through unchanged.
pub fn porter_stem(word: &str) -> String {
    if word.len() <= 2 || !word.bytes().all(|b| b.is_ascii_lowercase()) {
        return word.to_string();
    }
    let mut s = Stemmer::new(word);
    s.step1ab();
    s.step1c();
    s.step2();
    s.step3();
    s.step4();
    s.step5();
    s.into_stem()
}
