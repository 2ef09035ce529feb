/* tslint:disable */
/* eslint-disable */

/**
 * Diagnostics for one `(a, p_noise)` point.
 */
export class Report {
    private constructor();
    free(): void;
    [Symbol.dispose](): void;
    a: number;
    c_lur_closed: number;
    c_lur: number;
    k_total: number;
    lur_sum: number;
    min_pt_eigenvalue: number;
    mismatch7: number;
    mismatch8: number;
    noise_threshold: number;
    p_noise: number;
}

/**
 * Closed-form `C_LUR` on the same grid.
 */
export function c_lur_closed_curve(steps: number, p_noise: number): Float64Array;

/**
 * Numeric `C_LUR` on `steps` evenly spaced points of `[0, 1]`.
 */
export function c_lur_curve(steps: number, p_noise: number): Float64Array;

/**
 * `|ρ_ij|`, 81 values row-major.
 */
export function density_magnitudes(a: number, p_noise: number): Float64Array;

/**
 * Argmax and maximum of the closed-form curve.
 */
export function peak(): Float64Array;

/**
 * Eigenvalues of the partial transpose, ascending.
 */
export function pt_spectrum(a: number, p_noise: number): Float64Array;

export function report(a: number, p_noise: number): Report;

export function threshold_curve(steps: number): Float64Array;

export type InitInput = RequestInfo | URL | Response | BufferSource | WebAssembly.Module;

export interface InitOutput {
    readonly memory: WebAssembly.Memory;
    readonly __wbg_get_report_a: (a: number) => number;
    readonly __wbg_get_report_c_lur: (a: number) => number;
    readonly __wbg_get_report_c_lur_closed: (a: number) => number;
    readonly __wbg_get_report_k_total: (a: number) => number;
    readonly __wbg_get_report_lur_sum: (a: number) => number;
    readonly __wbg_get_report_min_pt_eigenvalue: (a: number) => number;
    readonly __wbg_get_report_mismatch7: (a: number) => number;
    readonly __wbg_get_report_mismatch8: (a: number) => number;
    readonly __wbg_get_report_noise_threshold: (a: number) => number;
    readonly __wbg_get_report_p_noise: (a: number) => number;
    readonly __wbg_report_free: (a: number, b: number) => void;
    readonly __wbg_set_report_a: (a: number, b: number) => void;
    readonly __wbg_set_report_c_lur: (a: number, b: number) => void;
    readonly __wbg_set_report_c_lur_closed: (a: number, b: number) => void;
    readonly __wbg_set_report_k_total: (a: number, b: number) => void;
    readonly __wbg_set_report_lur_sum: (a: number, b: number) => void;
    readonly __wbg_set_report_min_pt_eigenvalue: (a: number, b: number) => void;
    readonly __wbg_set_report_mismatch7: (a: number, b: number) => void;
    readonly __wbg_set_report_mismatch8: (a: number, b: number) => void;
    readonly __wbg_set_report_noise_threshold: (a: number, b: number) => void;
    readonly __wbg_set_report_p_noise: (a: number, b: number) => void;
    readonly c_lur_closed_curve: (a: number, b: number) => [number, number, number, number];
    readonly c_lur_curve: (a: number, b: number) => [number, number, number, number];
    readonly density_magnitudes: (a: number, b: number) => [number, number, number, number];
    readonly peak: () => [number, number];
    readonly pt_spectrum: (a: number, b: number) => [number, number, number, number];
    readonly report: (a: number, b: number) => [number, number, number];
    readonly threshold_curve: (a: number) => [number, number, number, number];
    readonly __wbindgen_externrefs: WebAssembly.Table;
    readonly __externref_table_dealloc: (a: number) => void;
    readonly __wbindgen_free: (a: number, b: number, c: number) => void;
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
