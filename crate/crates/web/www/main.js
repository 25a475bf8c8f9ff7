import init, { membership, images, radii } from './pkg/omega_web.js';

const $ = (id) => document.getElementById(id);
const inputs = ['name', 'lambda', 'eta-abs', 'eta-arg', 'n'];

function state() {
  return [
    $('name').value,
    parseFloat($('lambda').value),
    parseFloat($('eta-abs').value),
    parseFloat($('eta-arg').value),
    parseInt($('n').value, 10),
  ];
}

function fmt(x) {
  return x === null ? 'n/a' : Number(x).toPrecision(8);
}

function rows(table, entries) {
  table.innerHTML = entries
    .map(([k, v, cls]) => `<tr><td>${k}</td><td class="${cls || ''}">${v}</td></tr>`)
    .join('');
}

function draw(data) {
  const canvas = $('plot');
  const ctx = canvas.getContext('2d');
  const pts = [data.boundary, ...data.rings.map((r) => r.points)];
  let extent = 1;
  for (const p of pts) for (const v of p) extent = Math.max(extent, Math.abs(v));
  const scale = (0.45 * canvas.width) / extent;
  const cx = canvas.width / 2;
  const cy = canvas.height / 2;
  const x = (re) => cx + scale * re;
  const y = (im) => cy - scale * im;

  ctx.clearRect(0, 0, canvas.width, canvas.height);
  ctx.strokeStyle = '#ddd';
  ctx.lineWidth = 1;
  ctx.beginPath();
  ctx.moveTo(0, cy); ctx.lineTo(canvas.width, cy);
  ctx.moveTo(cx, 0); ctx.lineTo(cx, canvas.height);
  ctx.stroke();
  ctx.beginPath();
  ctx.arc(cx, cy, scale, 0, 2 * Math.PI);
  ctx.stroke();

  const loop = (flat, color, width) => {
    ctx.strokeStyle = color;
    ctx.lineWidth = width;
    ctx.beginPath();
    for (let k = 0; k < flat.length; k += 2) {
      const f = k === 0 ? ctx.moveTo : ctx.lineTo;
      f.call(ctx, x(flat[k]), y(flat[k + 1]));
    }
    ctx.closePath();
    ctx.stroke();
  };
  for (const ring of data.rings) loop(ring.points, '#7a9cc6', 1);
  loop(data.boundary, '#b22222', 2);

  ctx.fillStyle = '#222';
  ctx.beginPath();
  ctx.arc(x(data.witness[0]), y(data.witness[1]), 4, 0, 2 * Math.PI);
  ctx.fill();
}

function update() {
  $('lambda-out').value = $('lambda').value;
  $('eta-abs-out').value = $('eta-abs').value;
  $('eta-arg-out').value = $('eta-arg').value;
  $('n-out').value = $('n').value;
  rows($('radii'), []);
  try {
    const s = state();
    const m = JSON.parse(membership(...s));
    rows($('report'), [
      ['verdict', m.verdict, m.verdict],
      ['boundary sup', fmt(m.measured_sup)],
      ['margin', fmt(m.margin)],
      ['coefficient sum', fmt(m.coefficient_sum)],
      ['degree', m.degree],
    ]);
    draw(JSON.parse(images(...s, 1024)));
  } catch (e) {
    rows($('report'), [['error', String(e), 'non-member']]);
  }
}

function certifyRadii() {
  try {
    const r = JSON.parse(radii(...state()));
    rows($('radii'), [
      ['starlike', fmt(r.starlike)],
      ['starlike floor', fmt(r.starlike_floor)],
      ['convex', fmt(r.convex)],
      ['convex floor', fmt(r.convex_floor)],
    ]);
  } catch (e) {
    rows($('radii'), [['error', String(e), 'non-member']]);
  }
}

await init();
for (const id of inputs) $(id).addEventListener('input', update);
$('radii-btn').addEventListener('click', certifyRadii);
update();
