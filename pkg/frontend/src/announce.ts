/**
 * Screen-reader announcements via a single polite live region.
 *
 * Only status and errors go through here. Query answers are deliberately
 * NOT announced: the ready cue plays instead and users read the results
 * with their own screen reader at their own pace.
 */
export class Announcer {
  constructor(private readonly region: HTMLElement) {}

  announce(message: string): void {
    // clearing first makes repeated identical messages re-announce
    this.region.textContent = "";
    this.region.textContent = message;
  }

  clear(): void {
    this.region.textContent = "";
  }
}

/** Create the live region once and reuse it. */
export function installAnnouncer(document: Document): Announcer {
  let region = document.getElementById("status");
  if (!region) {
    region = document.createElement("div");
    region.id = "status";
    document.body.appendChild(region);
  }
  region.setAttribute("role", "status");
  region.setAttribute("aria-live", "polite");
  region.classList.add("visually-hidden");
  return new Announcer(region);
}
