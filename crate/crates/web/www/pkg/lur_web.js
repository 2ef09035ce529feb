/* @ts-self-types="./lur_web.d.ts" */

/**
 * Diagnostics for one `(a, p_noise)` point.
 */
export class Report {
    static __wrap(ptr) {
        const obj = Object.create(Report.prototype);
        obj.__wbg_ptr = ptr;
        ReportFinalization.register(obj, obj.__wbg_ptr, obj);
        return obj;
    }
    __destroy_into_raw() {
        const ptr = this.__wbg_ptr;
        this.__wbg_ptr = 0;
        ReportFinalization.unregister(this);
        return ptr;
    }
    free() {
        const ptr = this.__destroy_into_raw();
        wasm.__wbg_report_free(ptr, 0);
    }
    /**
     * @returns {number}
     */
    get a() {
        const ret = wasm.__wbg_get_report_a(this.__wbg_ptr);
        return ret;
    }
    /**
     * @returns {number}
     */
    get c_lur_closed() {
        const ret = wasm.__wbg_get_report_c_lur_closed(this.__wbg_ptr);
        return ret;
    }
    /**
     * @returns {number}
     */
    get c_lur() {
        const ret = wasm.__wbg_get_report_c_lur(this.__wbg_ptr);
        return ret;
    }
    /**
     * @returns {number}
     */
    get k_total() {
        const ret = wasm.__wbg_get_report_k_total(this.__wbg_ptr);
        return ret;
    }
    /**
     * @returns {number}
     */
    get lur_sum() {
        const ret = wasm.__wbg_get_report_lur_sum(this.__wbg_ptr);
        return ret;
    }
    /**
     * @returns {number}
     */
    get min_pt_eigenvalue() {
        const ret = wasm.__wbg_get_report_min_pt_eigenvalue(this.__wbg_ptr);
        return ret;
    }
    /**
     * @returns {number}
     */
    get mismatch7() {
        const ret = wasm.__wbg_get_report_mismatch7(this.__wbg_ptr);
        return ret;
    }
    /**
     * @returns {number}
     */
    get mismatch8() {
        const ret = wasm.__wbg_get_report_mismatch8(this.__wbg_ptr);
        return ret;
    }
    /**
     * @returns {number}
     */
    get noise_threshold() {
        const ret = wasm.__wbg_get_report_noise_threshold(this.__wbg_ptr);
        return ret;
    }
    /**
     * @returns {number}
     */
    get p_noise() {
        const ret = wasm.__wbg_get_report_p_noise(this.__wbg_ptr);
        return ret;
    }
    /**
     * @param {number} arg0
     */
    set a(arg0) {
        wasm.__wbg_set_report_a(this.__wbg_ptr, arg0);
    }
    /**
     * @param {number} arg0
     */
    set c_lur_closed(arg0) {
        wasm.__wbg_set_report_c_lur_closed(this.__wbg_ptr, arg0);
    }
    /**
     * @param {number} arg0
     */
    set c_lur(arg0) {
        wasm.__wbg_set_report_c_lur(this.__wbg_ptr, arg0);
    }
    /**
     * @param {number} arg0
     */
    set k_total(arg0) {
        wasm.__wbg_set_report_k_total(this.__wbg_ptr, arg0);
    }
    /**
     * @param {number} arg0
     */
    set lur_sum(arg0) {
        wasm.__wbg_set_report_lur_sum(this.__wbg_ptr, arg0);
    }
    /**
     * @param {number} arg0
     */
    set min_pt_eigenvalue(arg0) {
        wasm.__wbg_set_report_min_pt_eigenvalue(this.__wbg_ptr, arg0);
    }
    /**
     * @param {number} arg0
     */
    set mismatch7(arg0) {
        wasm.__wbg_set_report_mismatch7(this.__wbg_ptr, arg0);
    }
    /**
     * @param {number} arg0
     */
    set mismatch8(arg0) {
        wasm.__wbg_set_report_mismatch8(this.__wbg_ptr, arg0);
    }
    /**
     * @param {number} arg0
     */
    set noise_threshold(arg0) {
        wasm.__wbg_set_report_noise_threshold(this.__wbg_ptr, arg0);
    }
    /**
     * @param {number} arg0
     */
    set p_noise(arg0) {
        wasm.__wbg_set_report_p_noise(this.__wbg_ptr, arg0);
    }
}
if (Symbol.dispose) Report.prototype[Symbol.dispose] = Report.prototype.free;

/**
 * Closed-form `C_LUR` on the same grid.
 * @param {number} steps
 * @param {number} p_noise
 * @returns {Float64Array}
 */
export function c_lur_closed_curve(steps, p_noise) {
    const ret = wasm.c_lur_closed_curve(steps, p_noise);
    if (ret[3]) {
        throw takeFromExternrefTable0(ret[2]);
    }
    var v1 = getArrayF64FromWasm0(ret[0], ret[1]).slice();
    wasm.__wbindgen_free(ret[0], ret[1] * 8, 8);
    return v1;
}

/**
 * Numeric `C_LUR` on `steps` evenly spaced points of `[0, 1]`.
 * @param {number} steps
 * @param {number} p_noise
 * @returns {Float64Array}
 */
export function c_lur_curve(steps, p_noise) {
    const ret = wasm.c_lur_curve(steps, p_noise);
    if (ret[3]) {
        throw takeFromExternrefTable0(ret[2]);
    }
    var v1 = getArrayF64FromWasm0(ret[0], ret[1]).slice();
    wasm.__wbindgen_free(ret[0], ret[1] * 8, 8);
    return v1;
}

/**
 * `|ρ_ij|`, 81 values row-major.
 * @param {number} a
 * @param {number} p_noise
 * @returns {Float64Array}
 */
export function density_magnitudes(a, p_noise) {
    const ret = wasm.density_magnitudes(a, p_noise);
    if (ret[3]) {
        throw takeFromExternrefTable0(ret[2]);
    }
    var v1 = getArrayF64FromWasm0(ret[0], ret[1]).slice();
    wasm.__wbindgen_free(ret[0], ret[1] * 8, 8);
    return v1;
}

/**
 * Argmax and maximum of the closed-form curve.
 * @returns {Float64Array}
 */
export function peak() {
    const ret = wasm.peak();
    var v1 = getArrayF64FromWasm0(ret[0], ret[1]).slice();
    wasm.__wbindgen_free(ret[0], ret[1] * 8, 8);
    return v1;
}

/**
 * Eigenvalues of the partial transpose, ascending.
 * @param {number} a
 * @param {number} p_noise
 * @returns {Float64Array}
 */
export function pt_spectrum(a, p_noise) {
    const ret = wasm.pt_spectrum(a, p_noise);
    if (ret[3]) {
        throw takeFromExternrefTable0(ret[2]);
    }
    var v1 = getArrayF64FromWasm0(ret[0], ret[1]).slice();
    wasm.__wbindgen_free(ret[0], ret[1] * 8, 8);
    return v1;
}

/**
 * @param {number} a
 * @param {number} p_noise
 * @returns {Report}
 */
export function report(a, p_noise) {
    const ret = wasm.report(a, p_noise);
    if (ret[2]) {
        throw takeFromExternrefTable0(ret[1]);
    }
    return Report.__wrap(ret[0]);
}

/**
 * @param {number} steps
 * @returns {Float64Array}
 */
export function threshold_curve(steps) {
    const ret = wasm.threshold_curve(steps);
    if (ret[3]) {
        throw takeFromExternrefTable0(ret[2]);
    }
    var v1 = getArrayF64FromWasm0(ret[0], ret[1]).slice();
    wasm.__wbindgen_free(ret[0], ret[1] * 8, 8);
    return v1;
}
function __wbg_get_imports() {
    const import0 = {
        __proto__: null,
        __wbg___wbindgen_throw_41e9ee4f547fc59a: function(arg0, arg1) {
            throw new Error(getStringFromWasm0(arg0, arg1));
        },
        __wbindgen_generic_0000000000000001: function(arg0, arg1) {
            // Cast intrinsic for `Ref(String) -> Externref`.
            const ret = getStringFromWasm0(arg0, arg1);
            return ret;
        },
        __wbindgen_init_externref_table: function() {
            const table = wasm.__wbindgen_externrefs;
            const offset = table.grow(4);
            table.set(0, undefined);
            table.set(offset + 0, undefined);
            table.set(offset + 1, null);
            table.set(offset + 2, true);
            table.set(offset + 3, false);
        },
    };
    return {
        __proto__: null,
        "./lur_web_bg.js": import0,
    };
}

const ReportFinalization = (typeof FinalizationRegistry === 'undefined')
    ? { register: () => {}, unregister: () => {} }
    : new FinalizationRegistry(ptr => wasm.__wbg_report_free(ptr, 1));

function getArrayF64FromWasm0(ptr, len) {
    ptr = ptr >>> 0;
    return getFloat64ArrayMemory0().subarray(ptr / 8, ptr / 8 + len);
}

let cachedFloat64ArrayMemory0 = null;
function getFloat64ArrayMemory0() {
    if (cachedFloat64ArrayMemory0 === null || cachedFloat64ArrayMemory0.byteLength === 0) {
        cachedFloat64ArrayMemory0 = new Float64Array(wasm.memory.buffer);
    }
    return cachedFloat64ArrayMemory0;
}

function getStringFromWasm0(ptr, len) {
    return decodeText(ptr >>> 0, len);
}

let cachedUint8ArrayMemory0 = null;
function getUint8ArrayMemory0() {
    if (cachedUint8ArrayMemory0 === null || cachedUint8ArrayMemory0.byteLength === 0) {
        cachedUint8ArrayMemory0 = new Uint8Array(wasm.memory.buffer);
    }
    return cachedUint8ArrayMemory0;
}

function takeFromExternrefTable0(idx) {
    const value = wasm.__wbindgen_externrefs.get(idx);
    wasm.__externref_table_dealloc(idx);
    return value;
}

let cachedTextDecoder = new TextDecoder('utf-8', { ignoreBOM: true, fatal: true });
cachedTextDecoder.decode();
const MAX_SAFARI_DECODE_BYTES = 2146435072;
let numBytesDecoded = 0;
function decodeText(ptr, len) {
    numBytesDecoded += len;
    if (numBytesDecoded >= MAX_SAFARI_DECODE_BYTES) {
        cachedTextDecoder = new TextDecoder('utf-8', { ignoreBOM: true, fatal: true });
        cachedTextDecoder.decode();
        numBytesDecoded = len;
    }
    return cachedTextDecoder.decode(getUint8ArrayMemory0().subarray(ptr, ptr + len));
}

let wasmModule, wasmInstance, wasm;
function __wbg_finalize_init(instance, module) {
    wasmInstance = instance;
    wasm = instance.exports;
    wasmModule = module;
    cachedFloat64ArrayMemory0 = null;
    cachedUint8ArrayMemory0 = null;
    wasm.__wbindgen_start();
    return wasm;
}

async function __wbg_load(module, imports) {
    if (typeof Response === 'function' && module instanceof Response) {
        if (!module.ok) {
            throw new Error(`failed to fetch Wasm: ${module.status} ${module.statusText} fetching '${module.url}'`);
        }

        if (typeof WebAssembly.instantiateStreaming === 'function') {
            try {
                return await WebAssembly.instantiateStreaming(module, imports);
            } catch (e) {
                const validResponse = expectedResponseType(module.type);

                if (validResponse && module.headers.get('Content-Type') !== 'application/wasm') {
                    console.warn("`WebAssembly.instantiateStreaming` failed because your server does not serve Wasm with `application/wasm` MIME type. Falling back to `WebAssembly.instantiate` which is slower. Original error:\n", e);

                } else { throw e; }
            }
        }

        const bytes = await module.arrayBuffer();
        return await WebAssembly.instantiate(bytes, imports);
    } else {
        const instance = await WebAssembly.instantiate(module, imports);

        if (instance instanceof WebAssembly.Instance) {
            return { instance, module };
        } else {
            return instance;
        }
    }

    function expectedResponseType(type) {
        switch (type) {
            case 'basic': case 'cors': case 'default': return true;
        }
        return false;
    }
}

function initSync(module) {
    if (wasm !== undefined) return wasm;


    if (module !== undefined) {
        if (Object.getPrototypeOf(module) === Object.prototype) {
            ({module} = module)
        } else {
            console.warn('using deprecated parameters for `initSync()`; pass a single object instead')
        }
    }

    const imports = __wbg_get_imports();
    if (!(module instanceof WebAssembly.Module)) {
        module = new WebAssembly.Module(module);
    }
    const instance = new WebAssembly.Instance(module, imports);
    return __wbg_finalize_init(instance, module);
}

async function __wbg_init(module_or_path) {
    if (wasm !== undefined) return wasm;


    if (module_or_path !== undefined) {
        if (Object.getPrototypeOf(module_or_path) === Object.prototype) {
            ({module_or_path} = module_or_path)
        } else {
            console.warn('using deprecated parameters for the initialization function; pass a single object instead')
        }
    }

    if (module_or_path === undefined) {
        module_or_path = new URL('lur_web_bg.wasm', import.meta.url);
    }
    const imports = __wbg_get_imports();

    if (typeof module_or_path === 'string' || (typeof Request === 'function' && module_or_path instanceof Request) || (typeof URL === 'function' && module_or_path instanceof URL)) {
        module_or_path = fetch(module_or_path);
    }

    const { instance, module } = await __wbg_load(await module_or_path, imports);

    return __wbg_finalize_init(instance, module);
}

export { initSync, __wbg_init as default };
