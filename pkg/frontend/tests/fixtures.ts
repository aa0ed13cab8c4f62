/**
 * Test programs and deltas, written in the service's concrete syntax.
 *
 * The list-copy pair mirrors the backend test fixture: a recursive copy of
 * a two-element list, and the edit that pairs each copied head with `dup`
 * of itself. Its value delta is known to contain exactly two pair-frame
 * insertions and no wholesale replacements.
 */

const FST_IMPL = "fun p -> match p { (a, b) -> a }";
const SND_IMPL = "fun p -> match p { (a, b) -> b }";
const DUP_IMPL = "fun v -> (v, v)";
const LIST2 = "roll (inr (inl (), roll (inr (inr (), roll (inl ())))))";

const COPY =
  "fun self -> fun l -> match unroll l " +
  "{ inl n -> roll (inl n) " +
  "| inr c -> (fun x -> fun t -> roll (inr (x, (self self) t))) (fst c) (snd c) }";

export const COPY_LIST_PROGRAM =
  `(fun fst -> fun snd -> fun dup -> (${COPY}) (${COPY}) (${LIST2})) ` +
  `(${FST_IMPL}) (${SND_IMPL}) (${DUP_IMPL})`;

const COPY_EDIT =
  "fun self -> fun l -> match unroll ~{l} " +
  "{ inl n -> ~{roll (inl n)} " +
  "| inr c -> (fun x -> fun t -> roll (inr (+[(@, dup x)]{~{x}}, ~{(self self) t}))) " +
  "(~{fst c}) (~{snd c}) }";

export const COPY_LIST_DELTA =
  `(fun fst -> fun snd -> fun dup -> (${COPY_EDIT}) (${COPY_EDIT}) (~{${LIST2}})) ` +
  `(~{${FST_IMPL}}) (~{${SND_IMPL}}) (~{${DUP_IMPL}})`;

export const COPY_LIST_FUEL = 2048;

/** A closed term that never reaches a value, for exercising fuel failures. */
export const LOOP_PROGRAM = "(fun w -> w w) (fun w -> w w)";
