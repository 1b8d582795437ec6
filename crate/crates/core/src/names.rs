use std::collections::HashMap;

/// Hands out unique names within one level, suffixing `#k` on collision.
///
/// Generated names are built by joining component names, which can collide
/// when the components themselves contain separators.
#[derive(Default)]
pub(crate) struct UniqueNames {
    seen: HashMap<String, usize>,
}

impl UniqueNames {
    pub(crate) fn take(&mut self, name: String) -> String {
        let Some(&count) = self.seen.get(&name) else {
            self.seen.insert(name.clone(), 1);
            return name;
        };
        let mut k = count;
        let mut candidate = format!("{name}#{k}");
        while self.seen.contains_key(&candidate) {
            k += 1;
            candidate = format!("{name}#{k}");
        }
        self.seen.insert(name, k + 1);
        self.seen.insert(candidate.clone(), 1);
        candidate
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn collisions_get_suffixes() {
        let mut names = UniqueNames::default();
        assert_eq!(names.take("a,b".into()), "a,b");
        assert_eq!(names.take("a,b".into()), "a,b#1");
        assert_eq!(names.take("a,b#1".into()), "a,b#1#1");
        assert_eq!(names.take("a,b".into()), "a,b#2");
    }
}
