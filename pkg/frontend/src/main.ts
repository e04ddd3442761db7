import { GridWidget } from "./widget.js";

const form = document.querySelector<HTMLFormElement>("#loader")!;
const usernameInput = document.querySelector<HTMLInputElement>("#username")!;
const baseInput = document.querySelector<HTMLInputElement>("#base")!;
const mount = document.querySelector<HTMLElement>("#widget")!;

form.addEventListener("submit", (event) => {
  event.preventDefault();
  const username = usernameInput.value.trim();
  if (!username) return;
  const widget = new GridWidget(mount, baseInput.value.trim().replace(/\/$/, ""));
  void widget.load(username);
});
