/** The short ready cue played exactly once when an answer has rendered. */
export type ReadyCue = () => void;

/**
 * Default cue: a 120ms sine beep through the Web Audio API. Degrades to a
 * no-op where AudioContext is unavailable (tests inject a spy instead).
 */
export function defaultReadyCue(): void {
  const Ctor = (globalThis as { AudioContext?: typeof AudioContext }).AudioContext;
  if (!Ctor) return;
  try {
    const context = new Ctor();
    const oscillator = context.createOscillator();
    const gain = context.createGain();
    oscillator.frequency.value = 880;
    gain.gain.value = 0.08;
    oscillator.connect(gain);
    gain.connect(context.destination);
    oscillator.start();
    oscillator.stop(context.currentTime + 0.12);
    oscillator.onended = () => void context.close();
  } catch {
    // audio is best-effort; never let the cue break the answer flow
  }
}
