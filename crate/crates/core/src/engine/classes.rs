use crate::coxeter::{Permutation, Word};
use crate::engine::moves::commutation_class_of;
use crate::engine::search::{canonical_words, CanonicalWords};
use crate::error::Result;
use crate::reduced::BigCount;
use crate::repr::heap::{heap_of_word, linear_extension_count};

/// One commutation class, identified by its lexicographically least word.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CommutationClass {
    pub canonical: Word,
    pub size: BigCount,
    pub rank: usize,
    /// Every member in lexicographic order, when requested.
    pub members: Option<Vec<Word>>,
}

impl CommutationClass {
    pub fn from_canonical(canonical: Word, with_members: bool) -> Result<Self> {
        let size = linear_extension_count(&heap_of_word(&canonical));
        let members = if with_members { Some(commutation_class_of(&canonical)?.into_iter().collect()) } else { None };
        Ok(Self { rank: canonical.rank(), canonical, size, members })
    }
}

/// Streams the classes of `w` in lexicographic order of canonical word.
pub struct Classes {
    words: CanonicalWords,
    with_members: bool,
}

impl Iterator for Classes {
    type Item = CommutationClass;

    fn next(&mut self) -> Option<CommutationClass> {
        let canonical = self.words.next()?;
        // Canonical words come from reduced-word search, so closure cannot fail.
        Some(CommutationClass::from_canonical(canonical, self.with_members).expect("canonical words are reduced"))
    }
}

/// Class sizes come from linear-extension counting; `with_members` also
/// materializes each class by commutation closure.
pub fn enumerate_classes(w: &Permutation, with_members: bool) -> Result<Classes> {
    Ok(Classes { words: canonical_words(w)?, with_members })
}
