/* tslint:disable */
/* eslint-disable */
export const memory: WebAssembly.Memory;
export const __wbg_get_report_a: (a: number) => number;
export const __wbg_get_report_c_lur: (a: number) => number;
export const __wbg_get_report_c_lur_closed: (a: number) => number;
export const __wbg_get_report_k_total: (a: number) => number;
export const __wbg_get_report_lur_sum: (a: number) => number;
export const __wbg_get_report_min_pt_eigenvalue: (a: number) => number;
export const __wbg_get_report_mismatch7: (a: number) => number;
export const __wbg_get_report_mismatch8: (a: number) => number;
export const __wbg_get_report_noise_threshold: (a: number) => number;
export const __wbg_get_report_p_noise: (a: number) => number;
export const __wbg_report_free: (a: number, b: number) => void;
export const __wbg_set_report_a: (a: number, b: number) => void;
export const __wbg_set_report_c_lur: (a: number, b: number) => void;
export const __wbg_set_report_c_lur_closed: (a: number, b: number) => void;
export const __wbg_set_report_k_total: (a: number, b: number) => void;
export const __wbg_set_report_lur_sum: (a: number, b: number) => void;
export const __wbg_set_report_min_pt_eigenvalue: (a: number, b: number) => void;
export const __wbg_set_report_mismatch7: (a: number, b: number) => void;
export const __wbg_set_report_mismatch8: (a: number, b: number) => void;
export const __wbg_set_report_noise_threshold: (a: number, b: number) => void;
export const __wbg_set_report_p_noise: (a: number, b: number) => void;
export const c_lur_closed_curve: (a: number, b: number) => [number, number, number, number];
export const c_lur_curve: (a: number, b: number) => [number, number, number, number];
export const density_magnitudes: (a: number, b: number) => [number, number, number, number];
export const peak: () => [number, number];
export const pt_spectrum: (a: number, b: number) => [number, number, number, number];
export const report: (a: number, b: number) => [number, number, number];
export const threshold_curve: (a: number) => [number, number, number, number];
export const __wbindgen_externrefs: WebAssembly.Table;
export const __externref_table_dealloc: (a: number) => void;
export const __wbindgen_free: (a: number, b: number, c: number) => void;
export const __wbindgen_start: () => void;
