import init, * as lur from "./pkg/lur_web.js";

const STEPS = 401;
const $ = (id) => document.getElementById(id);

function axes(ctx, w, h, pad) {
  ctx.clearRect(0, 0, w, h);
  ctx.strokeStyle = "#999";
  ctx.beginPath();
  ctx.moveTo(pad, pad);
  ctx.lineTo(pad, h - pad);
  ctx.lineTo(w - pad, h - pad);
  ctx.stroke();
}

function plot(canvas, xs, series, yMin, yMax, marker) {
  const ctx = canvas.getContext("2d");
  const { width: w, height: h } = canvas;
  const pad = 36;
  axes(ctx, w, h, pad);
  const X = (x) => pad + x * (w - 2 * pad);
  const Y = (y) => h - pad - ((y - yMin) / (yMax - yMin)) * (h - 2 * pad);
  if (yMin < 0 && yMax > 0) {
    ctx.strokeStyle = "#ddd";
    ctx.beginPath();
    ctx.moveTo(pad, Y(0));
    ctx.lineTo(w - pad, Y(0));
    ctx.stroke();
  }
  for (const { ys, color, dash } of series) {
    ctx.strokeStyle = color;
    ctx.setLineDash(dash || []);
    ctx.beginPath();
    ys.forEach((y, i) => (i ? ctx.lineTo(X(xs[i]), Y(y)) : ctx.moveTo(X(xs[i]), Y(y))));
    ctx.stroke();
  }
  ctx.setLineDash([]);
  if (marker !== undefined) {
    ctx.strokeStyle = "#d62728";
    ctx.beginPath();
    ctx.moveTo(X(marker), pad);
    ctx.lineTo(X(marker), h - pad);
    ctx.stroke();
  }
  ctx.fillStyle = "#555";
  ctx.font = "11px sans-serif";
  ctx.fillText(yMax.toExponential(2), 2, pad);
  ctx.fillText(yMin.toExponential(2), 2, h - pad);
  ctx.fillText("a", w - pad + 6, h - pad + 4);
}

function drawMatrix(canvas, mags) {
  const ctx = canvas.getContext("2d");
  const n = 9;
  const cell = canvas.width / n;
  const max = Math.max(...mags);
  for (let i = 0; i < n; i++) {
    for (let j = 0; j < n; j++) {
      const v = mags[i * n + j] / max;
      const shade = Math.round(255 * (1 - Math.sqrt(v)));
      ctx.fillStyle = `rgb(${shade},${shade},255)`;
      ctx.fillRect(j * cell, i * cell, cell - 1, cell - 1);
    }
  }
}

function drawSpectrum(canvas, eig) {
  const ctx = canvas.getContext("2d");
  const { width: w, height: h } = canvas;
  ctx.clearRect(0, 0, w, h);
  const max = Math.max(...eig.map(Math.abs), 1e-9);
  const zero = h / 2;
  const bw = w / eig.length;
  ctx.strokeStyle = "#999";
  ctx.beginPath();
  ctx.moveTo(0, zero);
  ctx.lineTo(w, zero);
  ctx.stroke();
  eig.forEach((e, k) => {
    const hgt = (e / max) * (h / 2 - 10);
    ctx.fillStyle = e < -1e-12 ? "#b42318" : "#1f77b4";
    ctx.fillRect(k * bw + 4, zero - Math.max(hgt, 0), bw - 8, Math.abs(hgt));
  });
}

function row(name, value, cls) {
  return `<tr><td>${name}</td><td class="${cls || ""}">${value}</td></tr>`;
}

function update() {
  const a = parseFloat($("a").value);
  const p = parseFloat($("p").value);
  $("a-val").textContent = a.toFixed(4);
  $("p-val").textContent = p.toFixed(4);

  const xs = Array.from({ length: STEPS }, (_, k) => k / (STEPS - 1));
  const numeric = lur.c_lur_curve(STEPS, p);
  const closed = lur.c_lur_closed_curve(STEPS, p);
  const yMax = Math.max(0.002, ...numeric);
  const yMin = Math.min(0, ...numeric);
  plot($("curve"), xs, [
    { ys: Array.from(numeric), color: "#1f77b4" },
    { ys: Array.from(closed), color: "#ff7f0e", dash: [4, 4] },
  ], yMin, yMax, a);

  const r = lur.report(a, p);
  const violated = r.c_lur > 0;
  $("report").innerHTML =
    row("K_total", r.k_total.toFixed(12)) +
    row("LUR sum", r.lur_sum.toFixed(12), violated ? "ok" : "") +
    row("mismatch λ7", r.mismatch7.toExponential(6)) +
    row("mismatch λ8", r.mismatch8.toExponential(6)) +
    row("C_LUR (numeric)", r.c_lur.toExponential(6), violated ? "ok" : "bad") +
    row("C_LUR (closed form)", r.c_lur_closed.toExponential(6)) +
    row("min PT eigenvalue", r.min_pt_eigenvalue.toExponential(3), r.min_pt_eigenvalue >= -1e-12 ? "ok" : "bad") +
    row("noise threshold", r.noise_threshold.toExponential(6));
  r.free();

  drawMatrix($("matrix"), lur.density_magnitudes(a, p));
  drawSpectrum($("spectrum"), Array.from(lur.pt_spectrum(a, p)));
}

async function main() {
  await init();
  const xs = Array.from({ length: STEPS }, (_, k) => k / (STEPS - 1));
  const thresholds = Array.from(lur.threshold_curve(STEPS));
  plot($("threshold"), xs, [{ ys: thresholds, color: "#2ca02c" }], 0, Math.max(...thresholds) * 1.1);
  const [aStar] = lur.peak();
  $("a").value = aStar.toFixed(4);
  $("a").addEventListener("input", update);
  $("p").addEventListener("input", update);
  update();
}

main();
