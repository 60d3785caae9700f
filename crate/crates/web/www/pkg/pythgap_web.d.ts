/* tslint:disable */
/* eslint-disable */

/**
 * Rows `from..=to` of one orbit. `seed` 0 selects the stitched sequence,
 * `seed` i >= 1 the i-th fundamental solution.
 *
 * # Errors
 *
 * Returns an error for an invalid gap, an unknown seed, or `from > to`.
 */
export function orbit_table(gap: number, seed: number, from: number, to: number): string;

/**
 * Fundamental solutions of `p^2 - 2q^2 = +-n` with the triple each one yields.
 *
 * # Errors
 *
 * Returns an error for a zero or even `n`.
 */
export function pell_solutions(n: number): string;

/**
 * Candidate coefficients `A` for `a_{n+1} = A a_n - a_{n-1}` from two seeds,
 * each with its verdict.
 *
 * # Errors
 *
 * Returns an error for non-integer input, a non-positive offset, or seeds the
 * prediction cannot use.
 */
export function predict(a0: string, a1: string, offset: string): string;

export type InitInput = RequestInfo | URL | Response | BufferSource | WebAssembly.Module;

export interface InitOutput {
    readonly memory: WebAssembly.Memory;
    readonly orbit_table: (a: number, b: number, c: number, d: number) => [number, number, number, number];
    readonly pell_solutions: (a: number) => [number, number, number, number];
    readonly predict: (a: number, b: number, c: number, d: number, e: number, f: number) => [number, number, number, number];
    readonly __wbindgen_externrefs: WebAssembly.Table;
    readonly __externref_table_dealloc: (a: number) => void;
    readonly __wbindgen_free: (a: number, b: number, c: number) => void;
    readonly __wbindgen_malloc: (a: number, b: number) => number;
    readonly __wbindgen_realloc: (a: number, b: number, c: number, d: number) => number;
    readonly __wbindgen_start: () => void;
}

export type SyncInitInput = BufferSource | WebAssembly.Module;

/**
 * Instantiates the given `module`, which can either be bytes or
 * a precompiled `WebAssembly.Module`.
 *
 * @param {{ module: SyncInitInput }} module - Passing `SyncInitInput` directly is deprecated.
 *
 * @returns {InitOutput}
 */
export function initSync(module: { module: SyncInitInput } | SyncInitInput): InitOutput;

/**
 * If `module_or_path` is {RequestInfo} or {URL}, makes a request and
 * for everything else, calls `WebAssembly.instantiate` directly.
 *
 * @param {{ module_or_path: InitInput | Promise<InitInput> }} module_or_path - Passing `InitInput` directly is deprecated.
 *
 * @returns {Promise<InitOutput>}
 */
export default function __wbg_init (module_or_path?: { module_or_path: InitInput | Promise<InitInput> } | InitInput | Promise<InitInput>): Promise<InitOutput>;
